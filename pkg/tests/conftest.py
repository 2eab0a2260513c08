import itertools
import random

import pytest

from setfam.family import Family, mask_of


def fam(n, *sets) -> Family:
    return Family.of_sets(n, sets)


def random_family(rng: random.Random, n: int, max_size: int = 12, k: int | None = None) -> Family:
    """Uniformly sloppy random family; k restricts to one layer."""
    if k is None:
        pool = list(range(1 << n))
    else:
        pool = [mask_of(c, n) for c in itertools.combinations(range(1, n + 1), k)]
    size = rng.randint(0, min(max_size, len(pool)))
    return Family.of_masks(n, rng.sample(pool, size))


def random_t_intersecting(rng: random.Random, n: int, t: int, k: int | None = None,
                          max_size: int = 10) -> Family:
    """Greedy filter: keeps a random candidate if it stays t-intersecting."""
    if k is None:
        pool = [m for m in range(1 << n) if m.bit_count() >= t]
    else:
        pool = [mask_of(c, n) for c in itertools.combinations(range(1, n + 1), k)]
        pool = [m for m in pool if m.bit_count() >= t]
    rng.shuffle(pool)
    chosen: list[int] = []
    for m in pool:
        if len(chosen) >= max_size:
            break
        if all((m & c).bit_count() >= t for c in chosen):
            chosen.append(m)
    keep = rng.randint(0, len(chosen))
    return Family.of_masks(n, chosen[:keep])


def random_s_union(rng: random.Random, n: int, s: int, max_size: int = 12) -> Family:
    pool = [m for m in range(1 << n) if m.bit_count() <= s]
    rng.shuffle(pool)
    chosen: list[int] = []
    for m in pool:
        if len(chosen) >= max_size:
            break
        if all((m | c).bit_count() <= s for c in chosen):
            chosen.append(m)
    return Family.of_masks(n, chosen)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
