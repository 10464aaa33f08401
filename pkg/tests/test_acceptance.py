"""Exit criteria.  Each test records one PASS/FAIL line, printed in the terminal summary."""

import itertools
import subprocess
import sys
from math import gcd
from pathlib import Path

import numpy as np
import pytest

from almost_commute import counting
from almost_commute.enumeration import enumerate_h_shift, enumerate_intersection
from almost_commute.finewilf import pair_agreement, search_fine_wilf_pairs
from almost_commute.oracle import oracle_h_census, oracle_shift_members, scan
from almost_commute.verify import census_cases
from almost_commute.words import Word, hamming, word

RESULTS: dict[int, str] = {}

SWEEP = [(2, n) for n in range(2, 17)] + [(3, n) for n in range(2, 11)] + [(4, n) for n in range(2, 9)]
GOLDEN = Path(__file__).parent / "golden" / "table_h_k2_n2-10.csv"


def record(number, title, failures, detail=""):
    status = "PASS" if not failures else "FAIL"
    extra = f" - {detail}" if detail else ""
    if failures:
        extra += f" - first failure: {failures[0]}"
    RESULTS[number] = f"[{status}] criterion {number}: {title}{extra}"
    assert not failures, RESULTS[number]


@pytest.fixture(scope="module")
def censuses():
    return {(k, n): oracle_h_census(k, n) for k, n in SWEEP}


def test_1_formula_oracle_sweep():
    wanted = {"h", "h_shift", "h_new", "h_exactly_one", "lyndon"}
    checked, failures = 0, []
    for k, n in SWEEP:
        for case in census_cases(k, n):
            if case.quantity in wanted:
                checked += 1
                if not case.ok:
                    failures.append(case.describe())
    record(1, "formula/oracle equivalence sweep (exact)", failures, f"{checked} comparisons")


def test_2_spot_values(censuses):
    expected = {
        "h": {2: 2, 3: 6, 4: 12, 5: 30, 6: 54},
        "h_exactly_one": {2: 2, 4: 0, 6: 12},
        "lyndon": {2: 1, 3: 2, 4: 3, 5: 6, 6: 9},
    }
    formulas = {"h": counting.h_total, "h_exactly_one": counting.h_exactly_one, "lyndon": counting.count_lyndon_in_h}
    failures = []
    for quantity, table in expected.items():
        for n, value in table.items():
            census = censuses[(2, n)]
            seen = {"h": census.h, "h_exactly_one": census.h_exactly_one, "lyndon": census.lyndon_in_h}[quantity]
            if not seen == value == formulas[quantity](2, n):
                failures.append(f"{quantity}({n}): frozen={value} oracle={seen} formula={formulas[quantity](2, n)}")
    record(2, "oracle-confirmed golden spot values (k=2)", failures)


def test_3_prime_closed_form():
    failures = [
        f"k={k} n={n}: closed form={counting.h_prime_closed_form(k, n)} h={counting.h_total(k, n)}"
        for n in (2, 3, 5, 7, 11, 13)
        for k in (2, 3, 4, 5)
        if counting.h_prime_closed_form(k, n) != counting.h_total(k, n)
    ]
    record(3, "prime closed form equals h(n) for n in {2,3,5,7,11,13}, k in 2..5", failures)


def test_4_even_lower_bound(censuses):
    failures = []
    for (k, n), census in censuses.items():
        if n % 2 == 0 and n >= 4:
            bound = counting.even_lower_bound(k, n // 2)
            if not (census.h >= bound and counting.h_total(k, n) >= bound):
                failures.append(f"k={k} n={n}: h={census.h} bound={bound}")
    record(4, "h(2n) >= n k^n / 2 on every swept even length", failures)


def test_5_no_distance_one():
    failures, pairs = [], 0
    for total in range(2, 15):
        for symbols in itertools.product((0, 1), repeat=total):
            w = Word(symbols, 2)
            for split in range(1, total):
                x, y = w[:split], w[split:]
                pairs += 1
                if hamming(x + y, y + x) == 1:
                    failures.append(f"x={x} y={y}")
    record(5, "ham(xy, yx) != 1 for all binary x, y with |xy| <= 14", failures, f"{pairs} pairs")


def test_6_fine_wilf():
    failures = []
    found = 0
    for m in range(1, 7):
        for n in range(1, 7):
            for x, y in search_fine_wilf_pairs(2, m, n):
                found += 1
                if hamming(x + y, y + x) != 2:
                    failures.append(f"x={x} y={y}")
    for x, y, agreement in (("000000010000", "00000001", 15), ("010100101010", "0101001", 17)):
        info = pair_agreement(word(x), word(y))
        if not (info.is_fine_wilf_pair and info.agreement == agreement):
            failures.append(f"example x={x} y={y}: agreement={info.agreement}")
        if hamming(word(x + y), word(y + x)) != 2:
            failures.append(f"example x={x} y={y}: not at distance 2")
    record(6, "Fine-Wilf pairs almost commute; worked examples agree on 15 and 17", failures, f"{found} pairs")


def test_7_structural_enumerators():
    failures = []
    for k, n in SWEEP:
        for i in range(1, n):
            built = enumerate_h_shift(k, n, i)
            if built != oracle_shift_members(k, n, i) or len(built) != counting.h_shift(k, n, i):
                failures.append(f"H({n},{i}) k={k}")
    intersections = 0
    for k in (1, 2, 3):
        for n in range(4, 13):
            members = {i: set(oracle_shift_members(k, n, i)) for i in range(1, n // 2 + 1)}
            for i in range(2, n // 2 + 1):
                for j in range(1, i):
                    intersections += 1
                    built = enumerate_intersection(k, n, i, j)
                    g = gcd(gcd(n, i), j)
                    if (
                        set(built) != members[i] & members[j]
                        or len(built) != len(set(built))
                        or len(built) != (n // g) * k**g * g * (k - 1)
                    ):
                        failures.append(f"H({n},{i}) & H({n},{j}) k={k}")
    record(7, "enumerators equal oracle sets; sizes equal closed forms", failures, f"{intersections} intersections")


def test_8_invariants(censuses):
    failures = []
    for k, n in SWEEP:
        member_codes, member_rotations = [], []
        for chunk in scan(k, n):
            d = chunk.distances
            if not (d[:, 1:] == d[:, 1:][:, ::-1]).all():
                failures.append(f"shift symmetry k={k} n={n}")
            member = (d[:, 1:] == 2).any(axis=1)
            is_power = (chunk.rotations[:, 1:] == chunk.codes[:, None]).any(axis=1)
            if (member & is_power).any():
                failures.append(f"power member k={k} n={n}")
            member_codes.append(chunk.codes[member])
            member_rotations.append(chunk.rotations[member])
        codes = np.concatenate(member_codes)
        if not np.isin(np.concatenate(member_rotations), codes).all():
            failures.append(f"conjugate closure k={k} n={n}")
        if len(codes) % n or counting.h_total(k, n) % n or censuses[(k, n)].h % n:
            failures.append(f"n does not divide h(n) k={k} n={n}")
    record(8, "closure, primitivity, power exclusion, symmetry, n | h(n)", failures)


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "almost_commute", *argv], capture_output=True)


def test_9_cli_determinism():
    failures = []
    outputs = [_cli("table", "h", "--k", "2", "--n", "2..10", "--format", "csv") for _ in range(3)]
    if any(o.returncode != 0 for o in outputs):
        failures.append("table exited nonzero")
    if any(o.stdout != GOLDEN.read_bytes() for o in outputs):
        failures.append("table output differs from golden file")
    verify = _cli("verify", "--k-max", "2", "--n-max", "14")
    if verify.returncode != 0:
        failures.append(f"verify exited {verify.returncode}: {verify.stderr.decode()}")
    record(9, "CLI table is byte-identical to golden; verify --k-max 2 --n-max 14 exits 0", failures)
