#![allow(dead_code)]

use cubicff::invariants::{build_field, ShanksField};
use cubicff::ff_poly::Poly;

/// One published trivial-index row: `(q, A, h', split, inert, measure)`.
pub struct Row {
    pub q: u32,
    pub a: &'static str,
    pub hprime: u128,
    pub split: u64,
    pub inert: u64,
    pub measure: f64,
}

const fn row(q: u32, a: &'static str, hprime: u128, split: u64, inert: u64, measure: f64) -> Row {
    Row { q, a, hprime, split, inert, measure }
}

pub const TABLE_ONE: &[Row] = &[
    row(5, "t^2", 12, 13419, 26579, 0.42308),
    row(5, "t^2+1", 4, 13324, 26675, 0.11538),
    row(5, "t^2+2", 12, 13387, 26611, 0.42308),
    row(5, "t^2+3", 4, 13329, 26670, 0.11538),
    row(5, "2t^2", 3, 13364, 26634, 0.07692),
    row(5, "2t^2+1", 4, 13190, 26809, 0.11538),
    row(5, "2t^2+2", 3, 13388, 26610, 0.07692),
    row(5, "2t^2+3", 13, 13296, 26703, 0.5000),
    row(5, "t^3", 73, 13377, 26622, 0.05464),
    row(5, "t^3+3", 52, 13258, 26741, 0.03892),
    row(5, "t^3+t", 39, 13393, 26605, 0.02919),
    row(5, "t^3+t+1", 256, 13387, 26612, 0.19162),
    row(5, "t^3+t+3", 63, 13275, 26723, 0.04716),
    row(5, "t^3+2t", 27, 13355, 26643, 0.02021),
    row(5, "t^3+2t+1", 81, 13258, 26739, 0.06063),
    row(5, "t^3+2t+3", 111, 13405, 26593, 0.08308),
    row(5, "t^4", 8112, 33608, 66390, 0.09841),
    row(5, "t^4+1", 592, 33266, 66733, 7.182e-3),
    row(5, "t^4+2", 768, 33161, 66837, 9.317e-3),
    row(5, "t^4+3", 976, 33183, 66816, 0.0118),
    row(5, "t^4+4", 832, 33559, 66440, 0.0101),
    row(5, "t^4+t", 468, 33390, 66608, 5.677e-3),
    row(5, "t^4+t+1", 1812, 33383, 66615, 0.02198),
    row(5, "t^4+t+3", 868, 33232, 66767, 0.01053),
    row(5, "t^4+t^2", 336, 33143, 66855, 4.076e-3),
    row(7, "t^2", 13, 13350, 26648, 0.2619),
    row(7, "t^2+2", 12, 13362, 26635, 0.2381),
    row(7, "t^2+4", 9, 13307, 26689, 0.2143),
    row(7, "3t^2+3t+3", 13, 13365, 26633, 0.2619),
    row(7, "3t^2+3t+6", 9, 13306, 26690, 0.2143),
    row(7, "3t^2+4t+1", 12, 13369, 26628, 0.2381),
    row(7, "3t^2+4t+3", 13, 13364, 26634, 0.2619),
    row(7, "3t^2+5t", 12, 13307, 26689, 0.2381),
    row(7, "t^3+1", 441, 32949, 67049, 0.1257),
    row(7, "t^3+2", 144, 33433, 66565, 0.0399),
    row(7, "t^3+t+2", 324, 33238, 66758, 0.0922),
    row(7, "t^3+t+5", 225, 33126, 66871, 0.0633),
    row(7, "t^3+3t", 117, 33313, 66684, 0.0321),
    row(7, "t^3+3t+2", 729, 33316, 66680, 0.2089),
    row(7, "t^3+5t+1", 252, 33316, 66680, 0.0711),
    row(7, "2t^3+2t^2+6t+1", 576, 33308, 66690, 0.1647),
];

/// Truncation point used for a `(q, deg A)` block of the table.
pub fn table_truncation(q: u32, deg_a: usize) -> u64 {
    match (q, deg_a) {
        (5, 4) | (7, 3) => 100_000,
        _ => 40_000,
    }
}

pub const CLASS_NUMBER_ONE_Q7: &[&str] = &[
    "t^2+6", "t^2+t+1", "t^2+2t", "t^2+3t+3", "t^2+4t+3", "t^2+5t", "t^2+6t+1",
    "2t^2+6", "2t^2+t", "2t^2+2t+3", "2t^2+3t+1", "2t^2+4t+1", "2t^2+5t+3", "2t^2+6t",
    "3t^2+5", "3t^2+t+1", "3t^2+2t+3", "3t^2+3t+4", "3t^2+4t+4", "3t^2+5t+3", "3t^2+6t+1",
];

/// Non-cube-free q = 7 cubics with their tabulated `h'` (all with `R = 3`).
pub const LARGE_INDEX_Q7: &[(&str, u128)] = &[
    ("t^3+5", 3),
    ("t^3+t^2+5t+4", 3),
    ("t^3+2t^2+6t+5", 3),
    ("2t^3+5", 1),
    ("2t^3+6", 1),
    ("2t^3+t^2+6t+3", 1),
];

pub fn field(q: u32, a: &str) -> ShanksField {
    build_field(q, &Poly::parse(a, q).unwrap()).unwrap()
}
