"""The S_n-invariant subalgebra: alpha basis, coordinates, and class sums."""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import GroupAlgebraElement, PartialPermutation, PPElement, conjugate_action, forget
from .combinatorics import (
    Partition,
    Permutation,
    all_permutations,
    partitions_up_to,
    representative,
)
from .errors import NotInvariant, WeightExceedsN, WeightMismatch


@dataclass
class AlphaExpansion:
    """Coordinates of an invariant element on the alpha basis.

    ``n`` is ``None`` for data that does not depend on n.
    """

    coords: dict[Partition, Fraction] = field(default_factory=dict)
    n: int | None = None

    def __post_init__(self):
        cleaned = {Partition(k): Fraction(v) for k, v in self.coords.items() if v}
        if self.n is not None:
            for lam in cleaned:
                if lam.weight > self.n:
                    raise WeightExceedsN(f"{tuple(lam)} does not fit in n={self.n}")
        self.coords = dict(sorted(cleaned.items(), key=lambda kv: kv[0].sort_key()))

    def __getitem__(self, lam: Sequence[int]) -> Fraction:
        return self.coords.get(Partition(lam), Fraction(0))

    def to_element(self, n: int | None = None) -> PPElement:
        n = self.n if n is None else n
        if n is None:
            raise ValueError("a stable expansion needs an explicit n to be realised")
        out = PPElement.zero()
        for lam, c in self.coords.items():
            out = out + alpha_element(lam, n).scale(c)
        return out

    def to_json(self) -> dict:
        return {
            "n": "stable" if self.n is None else self.n,
            "coords": [{"lambda": list(lam), "coeff": str(c)} for lam, c in self.coords.items()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "AlphaExpansion":
        n = data["n"]
        coords = {Partition(e["lambda"]): Fraction(e["coeff"]) for e in data["coords"]}
        return cls(coords, None if n == "stable" else int(n))


@lru_cache(maxsize=None)
def alpha_element(lam: Sequence[int], n: int) -> PPElement:
    """Sum of all (sigma, d) with d a |lam|-subset of {1..n} and sigma of type lam."""
    lam = Partition(lam)
    k = lam.weight
    terms = {}
    if k <= n:
        for d in itertools.combinations(range(1, n + 1), k):
            for sigma in all_permutations(d):
                if sigma.cycle_type() == lam:
                    terms[PartialPermutation(sigma)] = 1
    return PPElement(terms)


def is_invariant(x: PPElement, n: int) -> bool:
    """Fixed by the adjacent transpositions (i i+1), which generate S_n."""
    full = range(1, n + 1)
    for i in range(1, n):
        tau = Permutation.from_cycles([(i, i + 1)], ground=full)
        if conjugate_action(tau, x) != x:
            return False
    if n <= 1:
        # no generators; still enforce the domain precondition
        conjugate_action(Permutation.identity(full), x)
    return True


def alpha_coordinates(x: PPElement, n: int) -> AlphaExpansion:
    """Read each coordinate off the representative term (sigma_lam, {1..|lam|}).

    The alpha elements have disjoint supports, so one lookup per partition
    determines an invariant element completely.
    """
    if not is_invariant(x, n):
        raise NotInvariant("element is not invariant under S_n")
    coords = {}
    for lam in partitions_up_to(n):
        c = x.coefficient(PartialPermutation(representative(lam)))
        if c:
            coords[lam] = c
    return AlphaExpansion(coords, n)


@lru_cache(maxsize=None)
def class_sum(mu: Sequence[int], n: int) -> GroupAlgebraElement:
    """Sum of all permutations of {1..n} of cycle type mu."""
    mu = Partition(mu)
    if mu.weight != n:
        raise WeightMismatch(f"|{tuple(mu)}| != {n}")
    return GroupAlgebraElement({s: 1 for s in all_permutations(range(1, n + 1)) if s.cycle_type() == mu}, n)


def complete(lam: Sequence[int], n: int) -> Partition:
    """lam with n - |lam| extra parts equal to 1."""
    lam = Partition(lam)
    return Partition(tuple(lam) + (1,) * (n - lam.weight))


@lru_cache(maxsize=None)
def a_element(lam: Sequence[int], n: int) -> GroupAlgebraElement:
    """Image of alpha_{lam;n} in Q[S_n]: a binomial multiple of a class sum."""
    lam = Partition(lam)
    if lam.weight > n:
        raise WeightExceedsN(f"|{tuple(lam)}| > {n}")
    m1 = lam.multiplicity(1)
    return class_sum(complete(lam, n), n).scale(math.comb(n - lam.weight + m1, m1))


def alpha_image(lam: Sequence[int], n: int) -> GroupAlgebraElement:
    """Same as :func:`a_element`, computed by forgetting ground sets."""
    return forget(alpha_element(lam, n), n)
