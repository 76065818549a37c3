"""Partial permutations, their semigroup algebra, and the group algebras of S_n.

An element lives in the algebra of partial permutations of {1..n} whenever
all of its ground sets fit inside {1..n}; ``n`` is an argument of the
structural maps, not a property of elements.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Callable, Hashable, Iterable, Iterator, Mapping

from .combinatorics import Partition, Permutation, compose, z_value
from .errors import DomainTooLarge


class PartialPermutation:
    """A pair (sigma, d) where sigma is a permutation of the finite set d."""

    __slots__ = ("sigma",)

    def __init__(self, sigma: Permutation, d: Iterable[int] | None = None):
        if d is not None:
            d = set(d)
            if not set(sigma.support) <= d:
                raise ValueError("support of sigma must lie inside d")
            if not set(sigma.ground) <= d:
                sigma = sigma.extend(d)
            elif set(sigma.ground) != d:
                sigma = sigma.restrict(d)
        object.__setattr__(self, "sigma", sigma)

    def __setattr__(self, name, value):
        raise AttributeError("PartialPermutation is immutable")

    @classmethod
    def from_cycles(cls, cycles, d: Iterable[int] = ()) -> "PartialPermutation":
        """``from_cycles([(1, 3)], {1, 2, 3})``; ``d`` is enlarged by the cycle points."""
        d = set(d) | {x for c in cycles for x in c}
        return cls(Permutation.from_cycles(cycles, ground=d))

    @classmethod
    def identity(cls, d: Iterable[int] = ()) -> "PartialPermutation":
        return cls(Permutation.identity(d))

    @property
    def d(self) -> tuple[int, ...]:
        return self.sigma.ground

    def __mul__(self, other: "PartialPermutation") -> "PartialPermutation":
        return pp_multiply(self, other)

    def sort_key(self) -> tuple:
        return (len(self.sigma.ground), self.sigma.ground, self.sigma.images)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialPermutation):
            return NotImplemented
        return self.sigma == other.sigma

    def __hash__(self) -> int:
        return hash(self.sigma)

    def __str__(self) -> str:
        return f"[{self.sigma} | {{{','.join(map(str, self.d))}}}]"

    def __repr__(self) -> str:
        return f"PartialPermutation{self}"

    def __reduce__(self):
        return (PartialPermutation, (self.sigma,))


def pp_multiply(x: PartialPermutation, y: PartialPermutation) -> PartialPermutation:
    """(sigma, d) . (sigma', d') = (sigma o sigma' on d | d', d | d')."""
    out = PartialPermutation.__new__(PartialPermutation)
    object.__setattr__(out, "sigma", compose(x.sigma, y.sigma))
    return out


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)) or isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class _SparseElement:
    """Finite linear combination of basis keys with exact rational coefficients.

    Zero coefficients are never stored. Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Hashable, object] | Iterable[tuple[Hashable, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for key, c in items:
            self._check_key(key)
            acc[key] = acc.get(key, 0) + _as_fraction(c)
        object.__setattr__(self, "_terms", {k: c for k, c in acc.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def _check_key(self, key) -> None:
        raise NotImplementedError

    def _like(self, terms: dict) -> "_SparseElement":
        # terms must already be pruned and validated
        out = object.__new__(type(self))
        object.__setattr__(out, "_terms", terms)
        self._copy_extra(out)
        return out

    def _copy_extra(self, out) -> None:
        pass

    def _compatible(self, other) -> None:
        pass

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def items(self) -> list[tuple[Hashable, Fraction]]:
        """Terms in deterministic order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __iter__(self) -> Iterator:
        return iter(k for k, _ in self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms and self._extra_eq(other)

    def _extra_eq(self, other) -> bool:
        return True

    __hash__ = None

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        self._compatible(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
        return self._like(acc)

    def __neg__(self):
        return self._like({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "_SparseElement":
        c = _as_fraction(c)
        if not c:
            return self._like({})
        return self._like({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if type(other) is not type(self):
            return NotImplemented
        self._compatible(other)
        acc: dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = self._key_product(k1, k2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return self._like({k: c for k, c in acc.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self._one()
        for _ in range(k):
            out = out * self
        return out

    def map_terms(self, fn: Callable, like=None):
        """Apply ``fn`` to every key; ``None`` results drop the term; collisions add."""
        acc: dict = {}
        for k, c in self._terms.items():
            nk = fn(k)
            if nk is None:
                continue
            acc[nk] = acc.get(nk, 0) + c
        target = like if like is not None else self
        return target._like({k: c for k, c in acc.items() if c})

    def _term_str(self, key) -> str:
        return str(key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c} * {self._term_str(k)}" for k, c in self.items())


class PPElement(_SparseElement):
    """Element of the rational semigroup algebra of partial permutations."""

    __slots__ = ()

    def _check_key(self, key) -> None:
        if not isinstance(key, PartialPermutation):
            raise TypeError("PPElement keys must be PartialPermutation")

    @staticmethod
    def _key_product(a: PartialPermutation, b: PartialPermutation) -> PartialPermutation:
        return pp_multiply(a, b)

    @classmethod
    def zero(cls) -> "PPElement":
        return cls()

    @classmethod
    def unit(cls) -> "PPElement":
        """(Id, empty set), the unit of every algebra in the tower."""
        return cls({PartialPermutation.identity(): 1})

    @classmethod
    def basis(cls, pp: PartialPermutation, coeff=1) -> "PPElement":
        return cls({pp: coeff})

    def _one(self) -> "PPElement":
        return PPElement.unit()

    def max_point(self) -> int:
        """Largest point appearing in any ground set (0 for none)."""
        return max((k.d[-1] for k in self._terms if k.d), default=0)

    def __repr__(self) -> str:
        return f"PPElement({self})"


def elem_add(x: PPElement, y: PPElement) -> PPElement:
    return x + y


def elem_scale(x: PPElement, c) -> PPElement:
    return x.scale(c)


def elem_multiply(x: PPElement, y: PPElement) -> PPElement:
    return x * y


class GroupAlgebraElement(_SparseElement):
    """Element of Q[S_g] for an explicit finite ground set g, usually {1..n}."""

    __slots__ = ("ground",)

    def __init__(self, terms=(), ground: int | Iterable[int] = ()):
        if isinstance(ground, int):
            ground = range(1, ground + 1)
        object.__setattr__(self, "ground", tuple(sorted(set(ground))))
        super().__init__(terms)

    def _check_key(self, key) -> None:
        if not isinstance(key, Permutation):
            raise TypeError("GroupAlgebraElement keys must be Permutation")
        if key.ground != self.ground:
            raise ValueError(f"permutation {key!r} is not on the ground set {self.ground}")

    def _copy_extra(self, out) -> None:
        object.__setattr__(out, "ground", self.ground)

    def _extra_eq(self, other) -> bool:
        return self.ground == other.ground

    def _compatible(self, other) -> None:
        if self.ground != other.ground:
            raise ValueError("group algebra elements live on different ground sets")

    @staticmethod
    def _key_product(a: Permutation, b: Permutation) -> Permutation:
        return compose(a, b)

    @property
    def n(self) -> int:
        return len(self.ground)

    @classmethod
    def identity(cls, ground: int | Iterable[int]) -> "GroupAlgebraElement":
        out = cls((), ground)
        return out._like({Permutation.identity(out.ground): Fraction(1)})

    @classmethod
    def zero_on(cls, ground: int | Iterable[int]) -> "GroupAlgebraElement":
        return cls((), ground)

    def _one(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement.identity(self.ground)

    def is_central(self) -> bool:
        """Commutes with every adjacent transposition of the ground set."""
        g = self.ground
        for a, b in zip(g, g[1:]):
            s = GroupAlgebraElement({Permutation.from_cycles([(a, b)], ground=g): 1}, g)
            if s * self != self * s:
                return False
        return True

    def class_expansion(self) -> dict[Partition, Fraction]:
        """Coefficients on the class sums C_mu; raises ValueError if not a class function."""
        coeffs: dict[Partition, Fraction] = {}
        counts: dict[Partition, int] = {}
        for sigma, c in self._terms.items():
            mu = sigma.cycle_type()
            if coeffs.setdefault(mu, c) != c:
                raise ValueError(f"coefficients differ inside the class {tuple(mu)}")
            counts[mu] = counts.get(mu, 0) + 1
        n = len(self.ground)
        for mu, cnt in counts.items():
            if cnt != math.factorial(n) // z_value(mu):
                raise ValueError(f"class {tuple(mu)} is only partially present")
        return dict(sorted(coeffs.items(), key=lambda kv: kv[0].sort_key()))

    def __repr__(self) -> str:
        return f"GroupAlgebraElement({self} on {self.ground})"


def _check_inside(x: PPElement, n: int) -> None:
    m = x.max_point()
    if m > n:
        raise DomainTooLarge(f"element uses point {m}, outside {{1..{n}}}")


def forget(x: PPElement, n: int) -> GroupAlgebraElement:
    """Forget ground sets, landing in Q[S_n]."""
    _check_inside(x, n)
    full = tuple(range(1, n + 1))
    target = GroupAlgebraElement.zero_on(n)
    return x.map_terms(lambda k: k.sigma.extend(full), like=target)


def transitive_part(x: PPElement, n: int) -> GroupAlgebraElement:
    """Keep the terms whose ground set is exactly {1..n}, forgetting it."""
    full = tuple(range(1, n + 1))
    target = GroupAlgebraElement.zero_on(n)
    return x.map_terms(lambda k: k.sigma if k.d == full else None, like=target)


def project_down(x: PPElement, n: int) -> PPElement:
    """Drop the terms whose ground set is not inside {1..n}."""
    return x.map_terms(lambda k: k if not k.d or k.d[-1] <= n else None)


def conjugate_action(tau: Permutation, x: PPElement) -> PPElement:
    """tau . (sigma, d) = (tau sigma tau^-1, tau(d)), extended linearly."""
    n = len(tau.ground)
    if tau.ground != tuple(range(1, n + 1)):
        raise ValueError("tau must be a permutation of {1..n}")
    _check_inside(x, n)

    def act(k: PartialPermutation) -> PartialPermutation:
        return PartialPermutation(Permutation({tau(a): tau(b) for a, b in zip(k.sigma.ground, k.sigma.images)}))

    return x.map_terms(act)


def phi_restrict(x: PPElement, d: Iterable[int]) -> GroupAlgebraElement:
    """Terms with ground set inside ``d`` survive as permutations of ``d``."""
    d = tuple(sorted(set(d)))
    dset = set(d)
    target = GroupAlgebraElement.zero_on(d)
    return x.map_terms(lambda k: k.sigma.extend(d) if dset.issuperset(k.d) else None, like=target)


def e_tilde(x: PPElement, n: int) -> PPElement:
    """Conditional expectation from partial permutations of {1..n+1} to those of {1..n}.

    A term survives only if n+1 belongs to its ground set and is fixed.
    """
    _check_inside(x, n + 1)
    last = n + 1

    def keep(k: PartialPermutation):
        if not k.d or k.d[-1] != last or k.sigma(last) != last:
            return None
        return PartialPermutation(k.sigma.restrict(k.d[:-1]))

    return x.map_terms(keep)


def expectation(x: GroupAlgebraElement) -> GroupAlgebraElement:
    """Q[S_{n+1}] -> Q[S_n]: keep permutations fixing n+1, restricted to {1..n}."""
    n1 = len(x.ground)
    if x.ground != tuple(range(1, n1 + 1)) or n1 < 1:
        raise ValueError("expectation needs an element of Q[S_{n+1}] on {1..n+1}")
    small = tuple(range(1, n1))
    target = GroupAlgebraElement.zero_on(n1 - 1)
    return x.map_terms(lambda s: s.restrict(small) if s(n1) == n1 else None, like=target)
