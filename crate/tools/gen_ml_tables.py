#!/usr/bin/env python3
"""Generate reference values and branch-switch calibration for the
Mittag-Leffler evaluator.

Writes:
  crates/core/src/special/ml_tuning.rs   -- branch-switch hint table
  crates/core/tests/common/ml_reference.rs -- frozen reference values

E_{a,b}(-x) is computed with mpmath at adaptive precision: the defining
series where its term count is tractable (precision chosen from the
cancellation estimate), and the algebraic large-argument expansion where
its optimally-truncated error is provably far below the target. The two
routes are cross-checked on overlaps.
"""

import math
import os
import sys

from mpmath import mp, mpf, rgamma, gamma, log, exp, power

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(HERE)


def series_peak(a, x, b=1.0):
    """(k_peak, ln_max_term) of the defining series at |z| = x."""
    if x <= 0:
        return 0, 0.0
    k = max(1.0, x ** (1.0 / a) / a)
    ln_t = k * math.log(x) - math.lgamma(a * k + b)
    return int(k), ln_t


def ml_series_mp(a, b, x):
    k_peak, ln_max = series_peak(a, x, b)
    digits = 60 + max(0, int(1.3 * ln_max / math.log(10)))
    terms = 3 * k_peak + 200
    if terms > 120000:
        raise RuntimeError(f"series infeasible: a={a} x={x} terms={terms}")
    with mp.workdps(digits):
        s = mpf(0)
        z = -mpf(x)
        for k in range(terms):
            t = power(z, k) * rgamma(a * k + b)
            s += t
            if k > k_peak and abs(t) < mpf(10) ** (-digits + 20) * abs(s):
                break
        return +s


def ml_asym_mp(a, b, x, need_rel=1e-30):
    """Large-argument expansion; returns None unless certified."""
    with mp.workdps(70):
        z = -mpf(x)
        s = mpf(0)
        prev = mp.inf
        err = mp.inf
        small_run = 0
        for k in range(1, 700):
            t = -power(z, -k) * rgamma(b - a * k)
            m = abs(t)
            if m >= prev and m > 0:
                err = m
                break
            s += t
            if m > 0:
                prev = m
                err = m
            if s != 0 and m < abs(s) * mpf(10) ** -60:
                small_run += 1
                if small_run >= 3:
                    err = m
                    break
            else:
                small_run = 0
        if s == 0:
            return None
        if err <= abs(s) * mpf(need_rel):
            return +s
        return None


def ml_integral_mp(a, b, x):
    """Real-line integral representation on the cut (0 < a < 1)."""
    assert 0 < a < 1 and x > 0
    if b > 1.0:
        inner = ml_integral_mp(a, b - a, x)
        return (inner - rgamma(b - a)) / (-mpf(x))
    with mp.workdps(50):
        z = -mpf(x)

        def f(s):
            if s <= 0:
                return mpf(0)
            sa = power(s, a)
            num = sa * mp.sinpi(1 - b) - z * mp.sinpi(1 - b + a)
            den = sa * sa - 2 * sa * z * mp.cospi(a) + z * z
            return power(s, a - b) * exp(-s) * num / den / mp.pi

        return mp.quad(f, [0, 1, 5, 20, 60, mp.inf])


def ml_ref(a, b, x):
    """Best-effort certified value of E_{a,b}(-x)."""
    if x == 0:
        return rgamma(b)
    v_asym = ml_asym_mp(a, b, x)
    k_peak, _ = series_peak(a, x, b)
    if v_asym is not None and k_peak > 400:
        return v_asym
    if 3 * k_peak + 200 > 60000:
        # series infeasible; fall back to a looser asymptotic bound or the
        # integral representation, cross-checking when both exist
        v_asym2 = ml_asym_mp(a, b, x, need_rel=1e-20)
        v_int = ml_integral_mp(a, b, x) if a < 1 else None
        if v_asym2 is not None and v_int is not None:
            rel = abs(v_asym2 - v_int) / max(abs(v_int), mpf(1e-300))
            assert rel < mpf(1e-15), f"asym/integral mismatch a={a} b={b} x={x}: {rel}"
            return v_asym2
        if v_int is not None:
            return v_int
        assert v_asym2 is not None, f"no route for a={a} b={b} x={x}"
        return v_asym2
    v_ser = ml_series_mp(a, b, x)
    if v_asym is not None:
        rel = abs(v_ser - v_asym) / max(abs(v_ser), mpf(1e-300))
        assert rel < mpf(1e-22), f"route mismatch a={a} b={b} x={x}: {rel}"
    return v_ser


def ml_est(a, b, x):
    """Cheap estimate of E_{a,b}(-x) (about 4+ digits), for threshold tests."""
    if a == 1.0:
        with mp.workdps(30):
            return mp.hyp1f1(1, b, -mpf(x)) * rgamma(b)
    v = ml_asym_mp(a, b, x, need_rel=1e-4)
    if v is not None:
        return v
    with mp.workdps(25):
        return ml_integral_mp(a, b, x)


def calibrate():
    """Per-a hints: z_series (series inside the f64 cancellation budget) and
    z_asym (asymptotic certified to 1e-13), worst case over a b scan."""
    rows = []
    bs = [0.5, 1.0, 2.0]

    def asym_ok(a, x):
        return all(ml_asym_mp(a, b, x, need_rel=1e-13) is not None for b in bs)

    def series_ok(a, x):
        for b in bs:
            _, ln_max = series_peak(a, x, b)
            v = abs(ml_est(a, b, x))
            if ln_max > math.log(250.0 * float(v)):
                return False
        return True

    for ai in range(1, 21):
        a = ai * 0.05
        lo, hi = 1.0, 80.0
        if not asym_ok(a, hi):
            hi = 400.0
        for _ in range(14):
            mid = math.sqrt(lo * hi)
            if asym_ok(a, mid):
                hi = mid
            else:
                lo = mid
        z_asym = hi
        lo, hi = 0.3, z_asym
        if series_ok(a, hi):
            lo = hi
        else:
            for _ in range(12):
                mid = math.sqrt(lo * hi)
                if series_ok(a, mid):
                    lo = mid
                else:
                    hi = mid
        z_series = lo
        rows.append((a, z_series, z_asym))
        print(f"  a={a:.2f}  z_series={z_series:.3f}  z_asym={z_asym:.3f}", flush=True)
    return rows


def write_tuning(rows):
    path = os.path.join(ROOT, "crates/core/src/special/ml_tuning.rs")
    with open(path, "w") as f:
        f.write(
            """//! Branch-switch calibration for the Mittag-Leffler evaluator.
//!
//! GENERATED by tools/gen_ml_tables.py -- do not edit by hand.
//! `z_asym` is the |z| beyond which the algebraic expansion certifies
//! ~1e-13 relative accuracy (worst case over a scan of b in (0, 2]);
//! `z_series` is the |z| below which the defining series stays within the
//! f64 cancellation budget. Both are fast-path hints; runtime error
//! bounds have the final say.

#[derive(Clone, Copy, Debug)]
pub struct MlTuning {
    pub a: f64,
    pub z_series: f64,
    pub z_asym: f64,
}

#[rustfmt::skip]
pub const ML_TUNING: [MlTuning; 20] = [
"""
        )
        for a, zs, za in rows:
            f.write(
                f"    MlTuning {{ a: {a:.2f}, z_series: {zs:.6e}, z_asym: {za:.6e} }},\n"
            )
        f.write(
            """];

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
"""
        )
    print(f"wrote {path}")


def fmt(v):
    with mp.workdps(19):
        s = mp.nstr(v, 17, strip_zeros=False)
    if "e" in s or "E" in s:
        return s
    if "." not in s:
        s += ".0"
    return s


def write_reference():
    mp.dps = 40
    lines = []
    lines.append("//! GENERATED by tools/gen_ml_tables.py -- frozen reference values for")
    lines.append("//! the Mittag-Leffler function, computed with an adaptive-precision")
    lines.append("//! series / large-argument expansion (certified to well below 1e-20).")
    lines.append("")
    lines.append("/// (a, b, z, E_{a,b}(z)) on z in [-10, 0].")
    lines.append("#[rustfmt::skip]")
    lines.append("pub const ML_REF_NEAR: &[(f64, f64, f64, f64)] = &[")
    for a in (0.3, 0.5, 0.8):
        for b in (a, 1.0, 1.0 + a):
            for j in range(21):
                x = mpf(10) * j / 20
                v = ml_ref(a, b, float(x))
                lines.append(
                    f"    ({a}, {b}, {fmt(-x)}, {fmt(v)}),"
                )
        print(f"  near band a={a} done", flush=True)
    lines.append("];")
    lines.append("")
    lines.append("/// (a, b, z, E_{a,b}(z)) on the far band z in [-1e8, -1e3].")
    lines.append("#[rustfmt::skip]")
    lines.append("pub const ML_REF_FAR: &[(f64, f64, f64, f64)] = &[")
    for a in (0.3, 0.5, 0.8):
        for b in (a, 1.0, 1.0 + a):
            for j in range(11):
                x = power(mpf(10), 3 + mpf(j) / 2)
                v = ml_asym_mp(a, b, float(x))
                assert v is not None
                lines.append(f"    ({a}, {b}, {fmt(-x)}, {fmt(v)}),")
    lines.append("];")
    lines.append("")
    lines.append("/// Stress values in the intermediate band (integral-representation")
    lines.append("/// territory for the larger orders).")
    lines.append("#[rustfmt::skip]")
    lines.append("pub const ML_REF_MID: &[(f64, f64, f64, f64)] = &[")
    for a in (0.55, 0.7, 0.85, 0.95):
        for b in (0.4, 1.0, 1.6, 2.0):
            for x in (3.0, 5.0, 8.0, 12.0, 20.0, 30.0):
                v = ml_ref(a, b, x)
                lines.append(f"    ({a}, {b}, {fmt(-mpf(x))}, {fmt(v)}),")
        print(f"  mid band a={a} done", flush=True)
    lines.append("];")
    lines.append("")
    path = os.path.join(ROOT, "crates/core/tests/common/ml_reference.rs")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        f.write("\n".join(lines))
    print(f"wrote {path}")


if __name__ == "__main__":
    if "--reference-only" not in sys.argv:
        print("calibrating branch switches...")
        rows = calibrate()
        write_tuning(rows)
    if "--tuning-only" not in sys.argv:
        print("generating reference values...")
        write_reference()
