"""Grid verification of every identity the library relies on.

Each check compares two or more independent routes and reports the first
failing case. Used by ``partperm verify``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .algebra import (
    PartialPermutation,
    PPElement,
    conjugate_action,
    forget,
    phi_restrict,
    project_down,
    transitive_part,
)
from .combinatorics import Partition, Permutation, all_permutations, part_transform, partitions_of, partitions_up_to
from .invariant import alpha_coordinates, alpha_element, is_invariant
from .jucys_murphy import (
    elementary_xi_closed,
    elementary_xi_direct,
    p_monomial,
    power_sum_classical,
    power_sum_xi,
    xi,
)
from .series import phi_series_q, phi_series_sinh
from .star import (
    biane_m_brute,
    biane_m_formula,
    count_algebraic,
    count_brute,
    count_gj,
    g_lambda,
    m_partial,
    minimal_length,
    pr_class_expansion,
)


class CheckFailed(Exception):
    pass


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    passed: bool = True
    detail: str | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "cases": self.cases, "status": "pass" if self.passed else "fail"}
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class _Counter:
    cases: int = 0

    def expect(self, ok: bool, what: Callable[[], str]) -> None:
        self.cases += 1
        if not ok:
            raise CheckFailed(what())


def random_pp_element(rng: random.Random, n: int, terms: int = 3) -> PPElement:
    """Small random element with ground sets inside {1..n} and coefficients in -3..3."""
    out = {}
    for _ in range(terms):
        d = [x for x in range(1, n + 1) if rng.random() < 0.5]
        imgs = d[:]
        rng.shuffle(imgs)
        out[PartialPermutation(Permutation(dict(zip(d, imgs))))] = rng.randint(-3, 3)
    return PPElement(out)


def _diff(lhs, rhs) -> str:
    return f"lhs - rhs = {lhs - rhs}"


def check_oracle_triple(c: _Counter, max_n: int, max_r: int) -> None:
    for n in range(2, max_n + 1):
        for r in range(1, max_r + 1):
            for sigma in all_permutations(range(1, n + 1)):
                b, a, g = count_brute(sigma, r), count_algebraic(sigma, r), count_gj(sigma.cycle_type(), r)
                c.expect(b == a == g, lambda: f"sigma={sigma} r={r}: brute {b}, algebraic {a}, formula {g}")


def check_class_symmetry(c: _Counter, max_n: int, max_r: int) -> None:
    for n in range(2, max_n + 1):
        for r in range(1, max_r + 1):
            seen: dict[Partition, int] = {}
            for sigma in all_permutations(range(1, n + 1)):
                v = count_brute(sigma, r)
                lam = sigma.cycle_type()
                c.expect(seen.setdefault(lam, v) == v, lambda: f"n={n} r={r}: class {tuple(lam)} not constant")


def check_parity_threshold(c: _Counter, max_n: int, max_r: int) -> None:
    for n in range(2, max_n + 1):
        for lam in partitions_of(n):
            m = minimal_length(lam)
            for r in range(1, max_r + 1):
                if r < m or (r - m) % 2:
                    v = count_gj(lam, r)
                    c.expect(v == 0, lambda: f"count{tuple(lam), r} = {v}, expected 0")


def check_lascoux_thibon(c: _Counter, max_n: int, max_r: int) -> None:
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            lhs, rhs = pr_class_expansion(r, n), power_sum_classical(r, n)
            c.expect(lhs == rhs, lambda: f"n={n} r={r}: {_diff(lhs, rhs)}")


def check_biane(c: _Counter, max_n: int, max_r: int) -> None:
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            formula, brute = biane_m_formula(n, r), biane_m_brute(n, r)
            partial = m_partial(n, r)
            c.expect(formula == brute, lambda: f"n={n} r={r}: formula vs brute, {_diff(formula, brute)}")
            c.expect(forget(partial, n) == brute, lambda: f"n={n} r={r}: forget(m_partial) differs from brute")
            coords = alpha_coordinates(partial, n)
            for lam in partitions_up_to(n):
                want = g_lambda(part_transform(lam, "union_one"), r)
                c.expect(coords[lam] == want, lambda: f"n={n} r={r}: alpha coordinate of {tuple(lam)} is {coords[lam]}, expected {want}")


def check_phi_forms(c: _Counter, max_weight: int, order: int) -> None:
    for lam in partitions_up_to(max_weight):
        if lam:
            s, q = phi_series_sinh(lam, order), phi_series_q(lam, order)
            c.expect(s == q, lambda: f"phi_{tuple(lam)}: sinh {s} vs q {q}")


def check_xi_commute(c: _Counter, max_i: int) -> None:
    for i in range(1, max_i + 1):
        for j in range(i + 1, max_i + 1):
            c.expect(xi(i) * xi(j) == xi(j) * xi(i), lambda: f"xi_{i} xi_{j} != xi_{j} xi_{i}")


def check_elementary(c: _Counter, max_n: int) -> None:
    for n in range(1, max_n + 1):
        for ell in range(1, n + 1):
            direct, closed = elementary_xi_direct(ell, n), elementary_xi_closed(ell, n)
            via_alpha = PPElement.zero()
            for lam in partitions_of(ell):
                via_alpha = via_alpha + alpha_element(part_transform(lam, "add_one_each"), n)
            c.expect(direct == closed == via_alpha, lambda: f"e_{ell} at n={n}: routes differ")


def check_power_sums(c: _Counter, max_n: int, max_r: int) -> None:
    for r in range(1, max_r + 1):
        for n in range(1, max_n + 1):
            p = power_sum_xi(r, n)
            c.expect(is_invariant(p, n), lambda: f"p_{r}(xi) not invariant at n={n}")
            if n >= 2:
                c.expect(project_down(p, n - 1) == power_sum_xi(r, n - 1), lambda: f"p_{r}(xi) not stable at n={n}")
            t = transitive_part(p, n)
            c.expect(t.is_central(), lambda: f"transitive part of p_{r}(xi) not central at n={n}")


def check_triangularity(c: _Counter, max_weight: int) -> None:
    for k in range(1, max_weight + 1):
        for lam in partitions_of(k):
            n = k + 1
            coords = alpha_coordinates(p_monomial(lam, n), n)
            bad = [mu for mu in coords.coords if mu.weight > k or (mu.weight == k and mu != lam)]
            c.expect(not bad and coords[lam] != 0, lambda: f"P_{tuple(lam)} not triangular: {coords.coords}")


def check_morphisms(c: _Counter, max_n: int, samples: int = 6) -> None:
    rng = random.Random(20240611)
    for n in range(1, max_n + 1):
        group = all_permutations(range(1, n + 1))
        for _ in range(samples):
            x, y = random_pp_element(rng, n), random_pp_element(rng, n)
            c.expect(forget(x * y, n) == forget(x, n) * forget(y, n), lambda: f"forget not multiplicative at n={n}")
            if n >= 2:
                c.expect(
                    project_down(x * y, n - 1) == project_down(x, n - 1) * project_down(y, n - 1),
                    lambda: f"projection not multiplicative at n={n}",
                )
            d = [p for p in range(1, n + 1) if rng.random() < 0.6]
            c.expect(
                phi_restrict(x * y, d) == phi_restrict(x, d) * phi_restrict(y, d),
                lambda: f"phi_{d} not multiplicative",
            )
            for tau in group:
                c.expect(
                    conjugate_action(tau, x * y) == conjugate_action(tau, x) * conjugate_action(tau, y),
                    lambda: f"action of {tau} not multiplicative",
                )


def run_suite(max_n: int = 4, max_r: int = 6, order: int = 14) -> list[CheckResult]:
    """Run every check over the grid; a failing check records its first counterexample."""
    plan: list[tuple[str, Callable[[_Counter], None]]] = [
        ("oracle_triple", lambda c: check_oracle_triple(c, max_n, max_r)),
        ("class_symmetry", lambda c: check_class_symmetry(c, max_n, max_r)),
        ("parity_threshold", lambda c: check_parity_threshold(c, max_n, max_r)),
        ("lascoux_thibon", lambda c: check_lascoux_thibon(c, max_n, max_r)),
        ("biane", lambda c: check_biane(c, max_n, max_r)),
        ("phi_cross_form", lambda c: check_phi_forms(c, max_n + 2, order)),
        ("xi_commute", lambda c: check_xi_commute(c, max_n + 2)),
        ("elementary_closed_form", lambda c: check_elementary(c, max_n)),
        ("power_sum_invariance", lambda c: check_power_sums(c, max_n, max_r)),
        ("p_monomial_triangular", lambda c: check_triangularity(c, max_n)),
        ("morphisms", lambda c: check_morphisms(c, max_n)),
    ]
    results = []
    for name, fn in plan:
        counter = _Counter()
        try:
            fn(counter)
            results.append(CheckResult(name, counter.cases))
        except CheckFailed as exc:
            results.append(CheckResult(name, counter.cases, False, str(exc)))
    return results
