"""Jucys-Murphy elements, classical and partial, and symmetric functions in them."""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

from .algebra import GroupAlgebraElement, PartialPermutation, PPElement
from .combinatorics import Partition, Permutation, all_permutations
from .errors import IndexExceedsN
from .invariant import alpha_element


@lru_cache(maxsize=None)
def xi(i: int) -> PPElement:
    """Partial JM element: sum over j < i of ((j i), {j, i})."""
    if i < 1:
        raise ValueError("i must be positive")
    return PPElement({PartialPermutation.from_cycles([(j, i)]): 1 for j in range(1, i)})


def classical_jm(i: int, n: int) -> GroupAlgebraElement:
    """X_i = sum over j < i of (j i), in Q[S_n]."""
    if not 1 <= i <= n:
        raise IndexExceedsN(f"JM index {i} outside 1..{n}")
    full = range(1, n + 1)
    return GroupAlgebraElement({Permutation.from_cycles([(j, i)], ground=full): 1 for j in range(1, i)}, n)


@lru_cache(maxsize=None)
def xi_power(i: int, r: int) -> PPElement:
    """xi(i)**r by iterated multiplication, cached because every route reuses it."""
    if r == 0:
        return PPElement.unit()
    return xi_power(i, r - 1) * xi(i)


@lru_cache(maxsize=None)
def classical_jm_power(i: int, n: int, r: int) -> GroupAlgebraElement:
    if r == 0:
        return GroupAlgebraElement.identity(n)
    return classical_jm_power(i, n, r - 1) * classical_jm(i, n)


def power_sum_xi(r: int, n: int) -> PPElement:
    """p_r(xi_1, ..., xi_n)."""
    if r < 1 or n < 1:
        raise ValueError("power_sum_xi needs r >= 1 and n >= 1")
    out = PPElement.zero()
    for i in range(1, n + 1):
        out = out + xi_power(i, r)
    return out


def power_sum_classical(r: int, n: int) -> GroupAlgebraElement:
    """p_r(X_1, ..., X_n) computed directly in Q[S_n]."""
    if r < 1 or n < 1:
        raise ValueError("power_sum_classical needs r >= 1 and n >= 1")
    out = GroupAlgebraElement.zero_on(n)
    for i in range(1, n + 1):
        out = out + classical_jm_power(i, n, r)
    return out


def elementary_xi_direct(ell: int, n: int) -> PPElement:
    """e_ell(xi_1, ..., xi_n) as a sum of products over ell-subsets."""
    if not 1 <= ell <= n:
        raise ValueError("need 1 <= ell <= n")
    out = PPElement.zero()
    for idx in itertools.combinations(range(1, n + 1), ell):
        prod = PPElement.unit()
        for i in idx:
            prod = prod * xi(i)
        out = out + prod
    return out


def elementary_xi_closed(ell: int, n: int) -> PPElement:
    """Sum of (sigma, supp sigma) over sigma in S_n with exactly n - ell cycles."""
    if not 1 <= ell <= n:
        raise ValueError("need 1 <= ell <= n")
    terms = {}
    for sigma in all_permutations(range(1, n + 1)):
        if sigma.num_cycles() == n - ell:
            terms[PartialPermutation(sigma.restrict(sigma.support))] = 1
    return PPElement(terms)


def p_monomial(lam: Sequence[int], n: int) -> PPElement:
    """alpha_(1)^m1 * prod over k >= 2 of p_{k-1}(xi)^m_k, for lam = 1^m1 2^m2 ..."""
    lam = Partition(lam)
    mult = lam.multiplicities()
    out = PPElement.unit()
    for _ in range(mult.get(1, 0)):
        out = out * alpha_element((1,), n)
    for k in sorted(mult):
        if k == 1:
            continue
        p = power_sum_xi(k - 1, n)
        for _ in range(mult[k]):
            out = out * p
    return out
