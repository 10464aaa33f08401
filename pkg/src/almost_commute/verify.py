"""Formula-versus-oracle sweep."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import counting
from .enumeration import DEFAULT_BUDGET
from .oracle import oracle_h_census


@dataclass(frozen=True)
class Case:
    k: int
    n: int
    quantity: str
    i: int | None
    formula: int
    oracle: int
    relation: str = "=="  # ">=" for lower bounds: oracle >= formula

    @property
    def ok(self) -> bool:
        if self.relation == ">=":
            return self.oracle >= self.formula
        return self.formula == self.oracle

    def describe(self) -> str:
        shift = "" if self.i is None else f" i={self.i}"
        return f"k={self.k} n={self.n}{shift} {self.quantity}: formula={self.formula} oracle={self.oracle} ({self.relation})"


@dataclass
class VerifyReport:
    k_max: int
    n_max: int
    budget: int
    cases: list[Case] = field(default_factory=list)
    skipped: list[tuple[int, int]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def mismatches(self) -> list[Case]:
        return [c for c in self.cases if not c.ok]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def census_cases(k: int, n: int, budget: int | None = None) -> list[Case]:
    """Every closed form that applies at ``(k, n)`` next to its brute-force count."""
    census = oracle_h_census(k, n, budget)
    cases = [Case(k, n, "h", None, counting.h_total(k, n), census.h)]
    cases += [
        Case(k, n, "h_shift", i, counting.h_shift(k, n, i), census.h_by_shift[i])
        for i in range(1, n)
    ]
    cases += [
        Case(k, n, "h_new", i, counting.h_new(k, n, i), census.h_new_by_shift[i])
        for i in range(1, n // 2 + 1)
    ]
    cases.append(Case(k, n, "h_exactly_one", None, counting.h_exactly_one(k, n), census.h_exactly_one))
    cases.append(Case(k, n, "lyndon", None, counting.count_lyndon_in_h(k, n), census.lyndon_in_h))
    # The polynomial form is derived for odd primes only.
    if n > 2 and counting.is_prime(n):
        cases.append(Case(k, n, "prime_form", None, counting.h_prime_closed_form(k, n), census.h))
    if n % 2 == 0 and n >= 4 and k >= 2:
        bound = counting.even_lower_bound(k, n // 2)
        cases.append(Case(k, n, "even_bound", None, bound, census.h, ">="))
    return cases


def run_verify(k_max: int, n_max: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    if k_max < 1 or n_max < 2:
        raise ValueError(f"verify requires k_max >= 1 and n_max >= 2 (k_max={k_max}, n_max={n_max})")
    report = VerifyReport(k_max, n_max, budget)
    started = time.perf_counter()
    for k in range(1, k_max + 1):
        for n in range(2, n_max + 1):
            if k**n > budget:
                report.skipped.append((k, n))
                continue
            report.cases.extend(census_cases(k, n, budget))
    report.elapsed = time.perf_counter() - started
    return report
