"""Seeded random and exhaustive propositional formula corpora"""

import random
import string
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from ..syntax.formulas import Box, Formula, Imp, Neg, PropAtom

_ATOM_LETTERS = "pqrs" + "".join(c for c in string.ascii_lowercase if c not in "pqrs")


def atom_names(count: int) -> List[str]:
    """``p, q, r, s`` and then the remaining letters in alphabetical order."""
    if not 1 <= count <= len(_ATOM_LETTERS):
        raise ValueError(f"atom count must be between 1 and {len(_ATOM_LETTERS)}")
    return list(_ATOM_LETTERS[:count])


def random_formula(rng: random.Random, atoms: Sequence[str], size: int) -> Formula:
    """A formula with exactly ``size`` nodes, atoms and connectives counted alike."""
    if size < 1:
        raise ValueError("size must be at least 1")
    if size == 1:
        return PropAtom(rng.choice(list(atoms)))
    kinds = ["neg", "box"] + (["imp"] if size >= 3 else [])
    kind = rng.choice(kinds)
    if kind == "neg":
        return Neg(random_formula(rng, atoms, size - 1))
    if kind == "box":
        return Box(random_formula(rng, atoms, size - 1))
    left = rng.randint(1, size - 2)
    return Imp(random_formula(rng, atoms, left), random_formula(rng, atoms, size - 1 - left))


def random_corpus(
    count: int, max_size: int, atoms: int = 2, seed: Optional[int] = None
) -> List[Formula]:
    """
    ``count`` formulas with sizes drawn uniformly from 1..``max_size``.

    The same seed always yields the same corpus.
    """
    rng = random.Random(seed)
    names = atom_names(atoms)
    return [random_formula(rng, names, rng.randint(1, max_size)) for _ in range(count)]


@lru_cache(maxsize=64)
def _exactly(atoms: Tuple[str, ...], connectives: int) -> Tuple[Formula, ...]:
    if connectives == 0:
        return tuple(PropAtom(name) for name in atoms)
    found: List[Formula] = []
    for body in _exactly(atoms, connectives - 1):
        found.append(Neg(body))
    for body in _exactly(atoms, connectives - 1):
        found.append(Box(body))
    for left_count in range(connectives):
        for left in _exactly(atoms, left_count):
            for right in _exactly(atoms, connectives - 1 - left_count):
                found.append(Imp(left, right))
    return tuple(found)


def enumerate_formulas(atoms: int, max_connectives: int) -> Iterator[Formula]:
    """Every formula over the first ``atoms`` atoms with at most ``max_connectives`` connectives."""
    names = tuple(atom_names(atoms))
    for connectives in range(max_connectives + 1):
        yield from _exactly(names, connectives)
