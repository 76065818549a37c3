"""Transitive star factorizations and the class expansions built from them.

Every quantity here has at least two routes: exhaustive enumeration of
star words, the partial-permutation algebra, and closed series formulas.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .algebra import GroupAlgebraElement, PPElement, e_tilde, expectation, transitive_part
from .combinatorics import Partition, Permutation, partitions_up_to, part_transform, z_value
from .errors import EmptyPartition, InternalMismatch, NonIntegerResult
from .invariant import a_element
from .jucys_murphy import classical_jm_power, xi_power
from .series import f_series, phi_series_sinh


def _check_full(sigma: Permutation) -> int:
    n = len(sigma.ground)
    if n < 1 or sigma.ground != tuple(range(1, n + 1)):
        raise ValueError("sigma must be a permutation of {1..n} with n >= 1")
    return n


def star_words(n: int, r: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Yield ``(word, images)`` for every transitive star word of length r.

    ``word = (i_1, ..., i_r)`` stands for (i_1 n)...(i_r n), rightmost factor
    applied first; ``images`` is the product in one-line notation on {1..n}.
    """
    if n < 2:
        if r == 0:
            yield (), tuple(range(1, n + 1))
        return
    gens = set(range(1, n))
    for word in itertools.product(range(1, n), repeat=r):
        if len(set(word)) != n - 1 or set(word) != gens:
            continue
        arr = list(range(n + 1))
        for i in word:
            arr[i], arr[n] = arr[n], arr[i]
        yield word, tuple(arr[1:])


@lru_cache(maxsize=None)
def _word_tally(n: int, r: int) -> Counter:
    return Counter(images for _, images in star_words(n, r))


def count_brute(sigma: Permutation, r: int) -> int:
    """Count transitive factorizations of sigma into r star transpositions by enumeration.

    For n = 1 there are no generators and the empty product counts once (r = 0).
    """
    n = _check_full(sigma)
    if r < 0:
        raise ValueError("r must be nonnegative")
    return _word_tally(n, r).get(sigma.images, 0)


def count_algebraic(sigma: Permutation, r: int) -> int:
    """Coefficient of sigma in the transitive part of xi_n ** r."""
    n = _check_full(sigma)
    if r < 0:
        raise ValueError("r must be nonnegative")
    if n == 1 and r == 0:
        # the unit has an empty ground set, so the algebra alone gives 0 here
        return 1
    c = transitive_part(xi_power(n, r), n).coefficient(sigma)
    if c.denominator != 1:
        raise NonIntegerResult(f"non-integral coefficient {c}")
    return int(c)


def _closed_form(lam: Partition, r: int) -> Fraction:
    """r!/|lam|! (prod lam_i) [t^g] f(t)^(|lam|-2) prod f(lam_i t), g = r - (|lam|+l-2)."""
    g = r - (lam.weight + lam.length - 2)
    if g < 0:
        return Fraction(0)
    f = f_series(g)
    s = f.int_pow(lam.weight - 2)
    for part in lam:
        s = s * f.scale_arg(part)
    return Fraction(math.factorial(r), math.factorial(lam.weight)) * math.prod(lam) * s.coefficient(g)


@lru_cache(maxsize=None)
def _g_lambda(lam: Partition, r: int, order: int) -> Fraction:
    via_phi = z_value(lam) * phi_series_sinh(lam, order).egf_coefficient(r)
    via_f = _closed_form(lam, r)
    if via_phi != via_f:
        raise InternalMismatch(f"g_{tuple(lam)}(r={r}): phi route {via_phi} != closed route {via_f}")
    return via_f


def g_lambda(lam: Sequence[int], r: int, order: int | None = None) -> Fraction:
    """Coefficient of alpha_lam in p_r(xi), computed two ways and compared."""
    lam = Partition(lam)
    if not lam:
        raise EmptyPartition("g_lambda needs a nonempty partition")
    if r < 0:
        raise ValueError("r must be nonnegative")
    if order is None:
        order = 2 * r + 2
    if order < r:
        raise ValueError(f"truncation order {order} is below r={r}")
    return _g_lambda(lam, r, order)


def count_gj(lam: Sequence[int], r: int) -> int:
    """Closed-form number of transitive star factorizations of a type-lam permutation of {1..|lam|}."""
    lam = Partition(lam)
    if not lam:
        raise EmptyPartition("count_gj needs a nonempty partition")
    value = _closed_form(lam, r)
    if value.denominator != 1 or value < 0:
        raise NonIntegerResult(f"count_gj{tuple(lam), r} gave {value}")
    return int(value)


def minimal_length(lam: Sequence[int]) -> int:
    lam = Partition(lam)
    return lam.weight + lam.length - 2


def pr_class_expansion(r: int, n: int) -> GroupAlgebraElement:
    """p_r(X_1..X_n) as the sum of g_lam(r) a_{lam;n} over nonempty |lam| <= n."""
    if r < 1 or n < 1:
        raise ValueError("need r >= 1 and n >= 1")
    out = GroupAlgebraElement.zero_on(n)
    for lam in partitions_up_to(n):
        if not lam:
            continue
        g = g_lambda(lam, r)
        if g:
            out = out + a_element(lam, n).scale(g)
    return out


def biane_m_brute(n: int, r: int) -> GroupAlgebraElement:
    """E(X_{n+1}^r) computed in Q[S_{n+1}]."""
    if r < 1 or n < 1:
        raise ValueError("need r >= 1 and n >= 1")
    return expectation(classical_jm_power(n + 1, n + 1, r))


def biane_coefficient(lam: Sequence[int], r: int) -> Fraction:
    """r!/(|lam|+1)! (prod lam_i) [t^(r-|lam|-l)] f(t)^|lam| prod f(lam_i t)."""
    lam = Partition(lam)
    g = r - (lam.weight + lam.length)
    if g < 0:
        return Fraction(0)
    f = f_series(g)
    s = f.int_pow(lam.weight)
    for part in lam:
        s = s * f.scale_arg(part)
    return Fraction(math.factorial(r), math.factorial(lam.weight + 1)) * math.prod(lam) * s.coefficient(g)


def biane_m_formula(n: int, r: int) -> GroupAlgebraElement:
    """Sum over |lam| <= n (empty included) of g_{lam u 1}(r) a_{lam;n}."""
    if r < 1 or n < 1:
        raise ValueError("need r >= 1 and n >= 1")
    out = GroupAlgebraElement.zero_on(n)
    for lam in partitions_up_to(n):
        g = g_lambda(part_transform(lam, "union_one"), r)
        if g != biane_coefficient(lam, r):
            raise InternalMismatch(f"coefficient of a_{tuple(lam)} differs between the two closed forms")
        if not lam and g:
            raise InternalMismatch(f"empty partition contributes {g} at r={r}")
        if g:
            out = out + a_element(lam, n).scale(g)
    return out


def m_partial(n: int, r: int) -> PPElement:
    """Partial analog of Biane's element: e_tilde_n(xi_{n+1}^r)."""
    if r < 1 or n < 1:
        raise ValueError("need r >= 1 and n >= 1")
    return e_tilde(xi_power(n + 1, r), n)
