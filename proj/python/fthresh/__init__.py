"""F-pure thresholds, test ideals and log canonical thresholds."""

from fractions import Fraction

from . import _core
from ._core import FthreshError, groebner, ideal_member, nu, nu_sequence, test_ideal

_RATIONAL_KEYS = {"lower", "upper", "guess", "lct", "c"}


def _fractions(obj):
    if isinstance(obj, dict):
        return {k: (Fraction(v) if k in _RATIONAL_KEYS and isinstance(v, str) else _fractions(v))
                for k, v in obj.items()}
    if isinstance(obj, list):
        return [_fractions(v) for v in obj]
    return obj


def _frac(c):
    return str(Fraction(c))


def error_code(exc):
    """Stable code name carried by a FthreshError, e.g. 'NotPrime'."""
    return exc.args[0]


def fpt_bounds(f, p, e_max=3, vars=None):
    return _fractions(_core.fpt_bounds(f, p, e_max, vars))


def test_ideal_at(f, p, c, e_max=4, vars=None):
    return _core.test_ideal_at(f, p, _frac(c), e_max, vars)


def lct_monomial(exponents):
    return Fraction(_core.lct_monomial(list(exponents)))


def lct_homogeneous(num_vars, degree):
    return Fraction(_core.lct_homogeneous(num_vars, degree))


def lct_plane_binomial(m, n):
    return Fraction(_core.lct_plane_binomial(m, n))


def resolve(f, vars=None):
    return _fractions(_core.resolve(f, vars))


def lct(f, vars=None):
    return resolve(f, vars)["lct"]


def candidates(f, bound=1, vars=None):
    return [Fraction(c) for c in _core.candidates(f, _frac(bound), vars)]


def compare(f, primes, e_max=3, lct=None, vars=None):
    return _fractions(_core.compare(f, list(primes), e_max, None if lct is None else _frac(lct), vars))


def elliptic(f, p, e_max=2, vars=None):
    return _core.elliptic(f, p, e_max, vars)


__all__ = [
    "FthreshError", "candidates", "compare", "elliptic", "error_code", "fpt_bounds", "groebner",
    "ideal_member", "lct", "lct_homogeneous", "lct_monomial", "lct_plane_binomial", "nu",
    "nu_sequence", "resolve", "test_ideal", "test_ideal_at",
]
