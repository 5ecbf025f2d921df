#![no_main]

use basel::harness::{solve, SolveInput};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() < 17 {
        return;
    }
    let u = f64::from_le_bytes(data[1..9].try_into().unwrap());
    let v = f64::from_le_bytes(data[9..17].try_into().unwrap());
    let input = match data[0] % 3 {
        0 => SolveInput::Angles(u, v),
        1 => SolveInput::Sides(u, v),
        _ => SolveInput::LogSides(u, v),
    };
    if let Ok(s) = solve(input) {
        for value in [s.alpha, s.beta, s.gamma, s.a, s.b] {
            assert!(value.is_finite(), "{input:?} -> {s:?}");
        }
    }
});
