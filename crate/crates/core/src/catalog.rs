//! Shipped variety specs: rational normal curves of degree 2, 3, 4 and the
//! Veronese surface in P^5. All are smooth, projectively normal, and come
//! with their standard minimal generating sets.

use crate::variety::Variety;

pub const CONIC_JSON: &str = include_str!("../varieties/conic.json");
pub const TWISTED_CUBIC_JSON: &str = include_str!("../varieties/twisted_cubic.json");
pub const RNC4_JSON: &str = include_str!("../varieties/rnc4.json");
pub const VERONESE_P2_JSON: &str = include_str!("../varieties/veronese_p2.json");

pub fn conic() -> Variety {
    Variety::parse(CONIC_JSON).expect("shipped spec is valid")
}

pub fn twisted_cubic() -> Variety {
    Variety::parse(TWISTED_CUBIC_JSON).expect("shipped spec is valid")
}

pub fn rnc4() -> Variety {
    Variety::parse(RNC4_JSON).expect("shipped spec is valid")
}

pub fn veronese_p2() -> Variety {
    Variety::parse(VERONESE_P2_JSON).expect("shipped spec is valid")
}

/// Look a shipped spec up by name.
pub fn by_name(name: &str) -> Option<Variety> {
    match name {
        "conic" => Some(conic()),
        "twisted_cubic" => Some(twisted_cubic()),
        "rnc4" => Some(rnc4()),
        "veronese_p2" => Some(veronese_p2()),
        _ => None,
    }
}

/// The shipped rational normal curves (the families with a Sylvester or
/// binary-discriminant oracle).
pub fn rational_normal_curves() -> Vec<Variety> {
    vec![conic(), twisted_cubic(), rnc4()]
}
