##################################################
# Module C - Complete Homogeneous Generators
# Python version: 3.13.x (project standard)
#
# Description:
# h_n in the plain alphabet (x_1..x_N) and in the doubled alphabet
# (x_1, x_1^-1, ..., x_N, x_N^-1). Both vanish for n < 0.
# Values are memoized per (kind, n, N); functools.lru_cache is safe
# under concurrent readers and writers.
#
# Functions:
# - h_plain(n, N), h_sympl(n, N)
# - Alphabet(n_vars, doubled).h(n)
# - h_cache_info(), clear_h_cache()
#
# Requirements:
# - standard library only
##################################################

from __future__ import annotations

import functools
import itertools
import logging
from collections import Counter
from dataclasses import dataclass

from laurent_module.laurent_poly import LaurentPoly

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def _h(kind: str, n: int, N: int) -> LaurentPoly:
    if n < 0:
        return LaurentPoly.zero(N)
    if n == 0:
        return LaurentPoly.one(N)
    # letters: plain -> (var, +1); doubled -> (var, +1) and (var, -1)
    if kind == "plain":
        letters = [(v, 1) for v in range(N)]
    else:
        letters = [(v, s) for v in range(N) for s in (1, -1)]
    counts: Counter = Counter()
    for word in itertools.combinations_with_replacement(letters, n):
        exp = [0] * N
        for v, s in word:
            exp[v] += s
        counts[tuple(exp)] += 1
    return LaurentPoly(N, counts)


def h_plain(n: int, N: int) -> LaurentPoly:
    return _h("plain", n, N)


def h_sympl(n: int, N: int) -> LaurentPoly:
    return _h("sympl", n, N)


def h_cache_info():
    return _h.cache_info()


def clear_h_cache() -> None:
    logger.debug("clearing h memo (%s)", _h.cache_info())
    _h.cache_clear()


@dataclass(frozen=True)
class Alphabet:
    n_vars: int
    doubled: bool = False

    def __post_init__(self):
        if self.n_vars < 0:
            raise ValueError(f"n_vars must be >= 0, got {self.n_vars}")

    def h(self, n: int) -> LaurentPoly:
        return h_sympl(n, self.n_vars) if self.doubled else h_plain(n, self.n_vars)


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    print(h_plain(2, 2))
    print(h_sympl(2, 1))
    print(h_cache_info())
