"""Permutiple search: from one known permutiple, every permutiple sharing its
digit multiset, multiplier, and length, grouped into conjugacy classes.

The heavy lifting lives in the C++ extension ``_permutiple``; this package
adds dict-returning wrappers around its JSON entry points.
"""

import json as _json

from ._permutiple import (
    Numeral,
    Permutation,
    PermutipleError,
    __version__,
    act,
    brute_json,
    compose,
    compute_carries,
    conjugate,
    format_cycles,
    format_numeral,
    from_value,
    inverse,
    parse_cycles,
    parse_numeral,
    power,
    search_json,
    solve_json,
    verify_json,
)

__all__ = [
    "Numeral",
    "Permutation",
    "PermutipleError",
    "act",
    "brute",
    "compose",
    "compute_carries",
    "conjugate",
    "format_cycles",
    "format_numeral",
    "from_value",
    "inverse",
    "parse_cycles",
    "parse_numeral",
    "power",
    "search",
    "solve",
    "verify",
]


def verify(base, mult, digits, sigma=None):
    """Check one numeral; without sigma, list every valid digit permutation."""
    return _json.loads(verify_json(base, mult, digits, sigma or ""))


def solve(base, mult, digits, sigma, allow_leading_zero=False,
          dedupe_numerals=False, show_empty=False):
    """All same-digit permutiples derived from the seed, by conjugacy class."""
    return _json.loads(solve_json(base, mult, digits, sigma, allow_leading_zero,
                                  dedupe_numerals, show_empty))


def brute(base, mult, digits, allow_leading_zero=False):
    """Brute-force reference enumeration, with a match flag against solve()."""
    return _json.loads(brute_json(base, mult, digits, allow_leading_zero))


def search(base, mult, length):
    """Scan every value of the given digit length for permutiples."""
    return _json.loads(search_json(base, mult, length))
