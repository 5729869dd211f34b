"""Cardinality-constrained online bin packing with exact rational arithmetic.

Sizes may be given as fractions.Fraction, int, or "p/q" strings. Every
rational that comes back is a Fraction.
"""

from fractions import Fraction

from . import _cardbin
from ._cardbin import Error, algorithm_names, validate as _validate

__all__ = [
    "Error",
    "algorithm_names",
    "batch_duel",
    "cli",
    "duel",
    "exact_opt",
    "generate",
    "item_weight",
    "lb_value",
    "ratio_table",
    "read_instance",
    "run",
    "trivial_lower_bound",
    "validate",
    "write_instance",
]


def _text(value):
    if isinstance(value, str):
        return value
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def _texts(sizes):
    return [_text(s) for s in sizes]


def _fractions(values):
    return [Fraction(v) for v in values]


def _certificate(raw):
    return {"bins": raw["bins"], "claim": raw["claim"], "count": raw["count"]}


def run(alg, k, sizes):
    """Pack `sizes` online; returns {"bins": [[item, ...], ...], "trace": [bin, ...]}."""
    return _cardbin.run(alg, k, _texts(sizes))


def exact_opt(k, sizes, budget=10_000_000):
    return _cardbin.exact_opt(k, _texts(sizes), budget)


def validate(k, sizes, bins):
    """Violation messages; empty when the packing is feasible."""
    return _validate(k, _texts(sizes), bins)


def trivial_lower_bound(k, sizes):
    return _cardbin.trivial_lower_bound(k, _texts(sizes))


def generate(family, k, ell=None, n=None, stop=4, eps=None, delta=None):
    raw = _cardbin.generate(
        family, k, ell, n, stop, None if eps is None else _text(eps), None if delta is None else _text(delta)
    )
    raw["sizes"] = _fractions(raw["sizes"])
    raw["certificate"] = _certificate(raw["certificate"])
    return raw


def duel(adversary, alg, k=None, eps=None):
    raw = _cardbin.duel(adversary, alg, k, None if eps is None else _text(eps))
    raw["sizes"] = _fractions(raw["sizes"])
    raw["ratio"] = Fraction(raw["ratio"])
    return raw


def batch_duel(alg, k, n, delta=None):
    raw = _cardbin.batch_duel(alg, k, n, None if delta is None else _text(delta))
    for stop in raw["stops"]:
        stop["ratio"] = Fraction(stop["ratio"])
    raw["max_ratio"] = Fraction(raw["max_ratio"])
    return raw


def lb_value(k):
    return Fraction(_cardbin.lb_value(k))


def item_weight(k, role, size):
    return Fraction(_cardbin.item_weight(k, role, _text(size)))


def ratio_table(k_from, k_to, ell=None):
    rows = _cardbin.ratio_table(k_from, k_to, ell)
    for row in rows:
        row["ratio"] = Fraction(row["ratio"])
        row["asymptote"] = Fraction(row["asymptote"])
    return rows


def read_instance(text):
    k, sizes = _cardbin.read_instance(text)
    return k, _fractions(sizes)


def write_instance(k, sizes):
    return _cardbin.write_instance(k, _texts(sizes))


def cli(*args):
    """Run the command line in-process; returns (status, stdout, stderr)."""
    return _cardbin.cli([str(a) for a in args])
