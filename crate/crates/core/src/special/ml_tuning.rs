//! Branch-switch calibration for the Mittag-Leffler evaluator.
//!
//! GENERATED by tools/gen_ml_tables.py — do not edit by hand.
//! `z_asym` is the |z| beyond which the algebraic expansion certifies
//! ~1e-12 relative accuracy (worst case over b in (0, 2]); `z_series` is
//! the |z| below which the defining series stays within the f64
//! cancellation budget. Both are fast-path hints; runtime error bounds
//! have the final say.

#[derive(Clone, Copy, Debug)]
pub struct MlTuning {
    pub a: f64,
    pub z_series: f64,
    pub z_asym: f64,
}

// provisional values from the analytic estimates; regenerated by the tool
pub const ML_TUNING: [MlTuning; 20] = [
    MlTuning { a: 0.05, z_series: 1.1, z_asym: 1.25 },
    MlTuning { a: 0.10, z_series: 1.2, z_asym: 1.5 },
    MlTuning { a: 0.15, z_series: 1.3, z_asym: 1.75 },
    MlTuning { a: 0.20, z_series: 1.5, z_asym: 2.0 },
    MlTuning { a: 0.25, z_series: 1.7, z_asym: 2.4 },
    MlTuning { a: 0.30, z_series: 1.9, z_asym: 2.9 },
    MlTuning { a: 0.35, z_series: 2.1, z_asym: 3.4 },
    MlTuning { a: 0.40, z_series: 2.3, z_asym: 4.0 },
    MlTuning { a: 0.45, z_series: 2.5, z_asym: 4.7 },
    MlTuning { a: 0.50, z_series: 2.7, z_asym: 5.6 },
    MlTuning { a: 0.55, z_series: 2.9, z_asym: 6.6 },
    MlTuning { a: 0.60, z_series: 3.1, z_asym: 7.8 },
    MlTuning { a: 0.65, z_series: 3.3, z_asym: 9.2 },
    MlTuning { a: 0.70, z_series: 3.5, z_asym: 10.9 },
    MlTuning { a: 0.75, z_series: 3.7, z_asym: 12.9 },
    MlTuning { a: 0.80, z_series: 3.9, z_asym: 15.2 },
    MlTuning { a: 0.85, z_series: 4.1, z_asym: 18.0 },
    MlTuning { a: 0.90, z_series: 4.3, z_asym: 21.2 },
    MlTuning { a: 0.95, z_series: 4.5, z_asym: 25.1 },
    MlTuning { a: 1.00, z_series: 4.7, z_asym: 29.6 },
];

/// Tuning row for the bucket containing `a` (conservative neighbour).
pub fn tuning_for(a: f64) -> MlTuning {
    let mut row = ML_TUNING[ML_TUNING.len() - 1];
    for t in ML_TUNING {
        if a <= t.a + 1e-12 {
            row = t;
            break;
        }
    }
    row
}
