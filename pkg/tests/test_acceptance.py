"""Exit criteria for the package, one test per criterion.

Each test records a one-line verdict; the lines are printed in the pytest
terminal summary (see conftest.py) and when this file is run as a script.
All comparisons are exact; runtimes are measured with cold kernel caches.
"""

from __future__ import annotations

import io
import json
import time
from contextlib import redirect_stdout

import pytest

from genocchi.cli import main, parse_table
from genocchi.families import (
    Family,
    FamilySpec,
    classical_genocchi,
    classical_genocchi_binomial,
    clear_caches,
    family_table,
    gould_hopper,
    gould_hopper_closed_form,
)
from genocchi.verify import (
    IdentityId,
    Status,
    VerifierConfig,
    check_heat_equation,
    check_printed_heat_equation,
    run_all,
    thm1_floor_sum,
)
from genocchi import verify

from oracles import genocchi_numbers, second_kind_numbers

RESULTS: dict[str, str] = {}
VERIFY_OUTPUT: list[str] = []  # AC2 output, reused by AC6


def record(name: str, ok: bool, detail: str) -> None:
    RESULTS[name] = f"{'PASS' if ok else 'FAIL'} {name}: {detail}"
    assert ok, RESULTS[name]


def cli(*argv: str) -> tuple[int, str]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def strip_timing(jsonl: str) -> str:
    out = []
    for line in jsonl.splitlines():
        d = json.loads(line)
        d.pop("elapsed_ms")
        out.append(json.dumps(d))
    return "\n".join(out)


def test_ac1_dual_route_equality():
    clear_caches()
    t0 = time.perf_counter()
    bad = []
    for n in range(33):
        if classical_genocchi(n, cross_check=False).value != classical_genocchi_binomial(n):
            bad.append(("classical", n))
        for j in (2, 3, 4):
            if gould_hopper(n, j, cross_check=False).value != gould_hopper_closed_form(n, j):
                bad.append(("gould-hopper", n, j))
    dt = time.perf_counter() - t0
    record("AC1 dual-route equality n<=32", not bad and dt < 10, f"mismatches={bad} runtime={dt:.2f}s (<10s)")


def test_ac2_full_identity_suite():
    clear_caches()
    t0 = time.perf_counter()
    code, out = cli("verify", "--identity", "all", "--n-max", "24", "--a-max", "3", "--b-max", "3", "--j-set", "2,3")
    dt = time.perf_counter() - t0
    reports = [json.loads(l) for l in out.splitlines()]
    statuses = {r["identity"]: r["status"] for r in reports}
    quotient = next(r for r in reports if r["identity"] == "HG_EULER_QUOTIENT")
    a1_points = [g for g in quotient["grid"] if g[2] == 1]
    ok = (
        code == 0
        and [r["identity"] for r in reports] == [i.value for i in IdentityId]
        and all(s == "PASS" for s in statuses.values())
        and not quotient["failures"]
        and len(a1_points) == 2 * 24
        and dt < 60
    )
    record("AC2 full identity suite n<=24", ok, f"exit={code} reports={len(reports)} statuses={set(statuses.values())} runtime={dt:.2f}s (<60s)")
    VERIFY_OUTPUT.append(out)


def test_ac3_known_sequences():
    g = [classical_genocchi(n, symbolic=False).value.constant_term() for n in range(1, 9)]
    s = [c.constant_term() for c in family_table(FamilySpec(Family.SECOND_KIND_GENOCCHI), 5, symbolic=False)]
    e = [c.constant_term() for c in family_table(FamilySpec(Family.SECOND_KIND_EULER), 4, symbolic=False)]
    oracle_ok = genocchi_numbers(8)[1:] == [1, -1, 0, 1, 0, -3, 0, 17] and second_kind_numbers(5) == [0, 1, 0, -3, 0, 25]
    ok = (
        oracle_ok
        and g == [1, -1, 0, 1, 0, -3, 0, 17]
        and s == [0, 1, 0, -3, 0, 25]
        and [e[0], e[2], e[4]] == [1, -1, 5]
        and e == second_kind_numbers(4, with_t=False)
    )
    record("AC3 known sequences", ok, f"G_1..8={[int(v) for v in g]} SKG_0..5={[int(v) for v in s]} E_0,2,4={[int(e[0]), int(e[2]), int(e[4])]}")


def test_ac4_heat_equation():
    r = check_heat_equation(20, (2, 3))
    printed = check_printed_heat_equation(20, (2, 3))
    counter = {(f.params["n"], f.params["j"]) for f in printed.failures}
    ok = r.status is Status.PASS and len(r.parameter_grid) == 42 and (2, 2) in counter
    record("AC4 heat equation n<=20 j in {2,3}", ok, f"corrected={r.status.value} printed form fails at (2,2)={(2, 2) in counter}")


def test_ac5_theorem_triangle():
    n_max = 24
    direct = family_table(FamilySpec(Family.HERMITE_GENOCCHI, j=2, a=1), n_max)
    skg = family_table(FamilySpec(Family.SECOND_KIND_GENOCCHI), n_max)
    numbers = family_table(FamilySpec(Family.SECOND_KIND_GENOCCHI), n_max, symbolic=False)
    gh = family_table(FamilySpec(Family.GOULD_HOPPER, j=2, a=0), n_max)
    bad = [
        n
        for n in range(n_max + 1)
        if not (direct[n] == thm1_floor_sum(n, skg) == verify._binomial_convolution(n, numbers, gh))
    ]
    record("AC5 THM1 = THM3 = generating function n<=24", not bad, f"mismatching n={bad}")


def test_ac6_cli_determinism_and_round_trip():
    table_args = ("table", "--family", "hermite-genocchi", "--j", "3", "--a", "2", "--n-max", "16")
    _, t1 = cli(*table_args)
    _, t2 = cli(*table_args)
    _, c1 = cli(*table_args, "--format", "csv")
    _, c2 = cli(*table_args, "--format", "csv")
    spec, rows = parse_table(t1)
    round_trip = rows == family_table(spec, 16)
    verify_args = ("verify", "--identity", "all", "--n-max", "24", "--a-max", "3", "--b-max", "3", "--j-set", "2,3")
    v1 = VERIFY_OUTPUT[0] if VERIFY_OUTPUT else cli(*verify_args)[1]
    _, v2 = cli(*verify_args)
    same_verify = strip_timing(v1) == strip_timing(v2)
    ok = t1 == t2 and c1 == c2 and round_trip and same_verify
    record(
        "AC6 CLI determinism and JSON round-trip",
        ok,
        f"table identical={t1 == t2 and c1 == c2} round-trip={round_trip} verify identical={same_verify}",
    )


def test_ac7_scaling_n40():
    clear_caches()
    t0 = time.perf_counter()
    reports = run_all(VerifierConfig(n_max=40))
    dt = time.perf_counter() - t0
    g40 = classical_genocchi(40, symbolic=False).value.constant_term()
    oracle = genocchi_numbers(40)[40]
    ok = all(r.status is Status.PASS for r in reports) and len(reports) == 13 and g40 == oracle and dt < 300
    record("AC7 suite at n_max=40", ok, f"all PASS={all(r.status is Status.PASS for r in reports)} G_40 digits={len(str(g40.numerator))} runtime={dt:.1f}s (<300s)")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
