from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given, strategies as st

from partperm.combinatorics import (
    Partition,
    Permutation,
    all_permutations,
    compose,
    cycle_type,
    num_cycles,
    part_transform,
    partitions_of,
    representative,
    z_value,
)
from partperm.errors import MissingPartOne

from strategies import permutations_on


def brute_partition_count(k: int) -> int:
    # sort every composition of k and deduplicate
    seen = set()
    for cuts in itertools.product((0, 1), repeat=max(k - 1, 0)):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        if k:
            parts.append(run)
        seen.add(tuple(sorted(parts, reverse=True)))
    return len(seen)


def brute_cycle_lengths(images: tuple[int, ...]) -> list[int]:
    # images in one-line notation on {0..k-1}
    left, out = set(range(len(images))), []
    while left:
        x = min(left)
        length = 0
        while x in left:
            left.remove(x)
            x = images[x]
            length += 1
        out.append(length)
    return sorted(out, reverse=True)


def test_compose_example():
    p = Permutation.from_cycles([(1, 3)])
    q = Permutation.from_cycles([(2, 3)])
    assert compose(p, q) == Permutation.from_cycles([(1, 3, 2)])
    assert compose(p, q).ground == (1, 2, 3)


def test_compose_identity_and_inverse():
    sigma = Permutation.from_cycles([(1, 4, 2)], ground=range(1, 6))
    assert compose(Permutation.identity(), sigma) == sigma
    assert compose(sigma, sigma.inverse()) == Permutation.identity(range(1, 6))


def test_ground_set_is_part_of_equality():
    assert Permutation.identity({1}) != Permutation.identity()
    assert Permutation.from_cycles([(1, 2)]) != Permutation.from_cycles([(1, 2)], ground={1, 2, 3})


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation({1: 2, 2: 2})


@pytest.mark.parametrize(
    "sigma, lam, cycles",
    [
        (Permutation.from_cycles([(1, 2)], ground={1, 2, 3}), (2, 1), 2),
        (Permutation.identity(range(1, 6)), (1, 1, 1, 1, 1), 5),
        (Permutation.from_cycles([(1, 3, 2)]), (3,), 1),
    ],
)
def test_cycle_type_and_num_cycles(sigma, lam, cycles):
    assert cycle_type(sigma) == lam
    assert num_cycles(sigma) == cycles


@pytest.mark.parametrize("lam, z", [((2, 1), 2), ((2, 2), 8), ((), 1), ((3, 1, 1), 6)])
def test_z_value(lam, z):
    assert z_value(lam) == z


def test_part_transform():
    assert part_transform((2, 1), "add_one_each") == (3, 2)
    assert part_transform((3,), "union_one") == (3, 1)
    assert part_transform((2, 1, 1), "remove_a_one") == (2, 1)
    with pytest.raises(MissingPartOne):
        part_transform((2, 2), "remove_a_one")


def test_partitions_small():
    assert partitions_of(0) == [()]
    assert len(partitions_of(4)) == 5
    assert len(partitions_of(7)) == 15


@pytest.mark.parametrize("k", range(11))
def test_partition_counts_against_brute_force(k):
    parts = partitions_of(k)
    assert len(parts) == brute_partition_count(k)
    assert len(set(parts)) == len(parts)
    assert all(p.weight == k for p in parts)


def test_partitions_reverse_lexicographic():
    for k in range(1, 9):
        parts = [tuple(p) for p in partitions_of(k)]
        assert parts == sorted(parts, reverse=True)


def test_partition_validation_and_text():
    assert Partition.parse("3,1,1") == (3, 1, 1)
    assert Partition.parse("") == ()
    assert Partition((3, 1, 1)).to_text() == "3,1,1"
    for bad in ("1,2", "0", "a,b", "2,-1"):
        with pytest.raises(ValueError):
            Partition.parse(bad)


@pytest.mark.parametrize("k", range(1, 7))
def test_class_sizes_by_exhaustive_enumeration(k):
    counts: dict[tuple, int] = {}
    for images in itertools.permutations(range(k)):
        lam = tuple(brute_cycle_lengths(images))
        counts[lam] = counts.get(lam, 0) + 1
    assert sorted(counts) == sorted(tuple(p) for p in partitions_of(k))
    for lam, cnt in counts.items():
        assert cnt == math.factorial(k) // z_value(lam)
        assert math.factorial(k) % z_value(lam) == 0
    # the library's cycle type agrees with the brute-force one
    for sigma in all_permutations(range(1, k + 1)):
        assert list(sigma.cycle_type()) == brute_cycle_lengths(tuple(x - 1 for x in sigma.images))


def test_representative_blocks():
    sigma = representative((3, 2, 1))
    assert sigma.cycles() == [(1, 2, 3), (4, 5)]
    assert sigma.ground == (1, 2, 3, 4, 5, 6)


@given(permutations_on())
def test_cycle_type_sums_to_ground(p):
    assert sum(p.cycle_type()) == len(p.ground)
    assert p.num_cycles() == len(p.cycle_type())


@given(permutations_on(), permutations_on(), permutations_on())
def test_compose_associative(p, q, r):
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(permutations_on(), st.integers(1, 6))
def test_compose_applies_right_factor_first(p, x):
    q = Permutation.from_cycles([(1, 2)], ground={1, 2})
    assert compose(p, q)(x) == p(q(x))
