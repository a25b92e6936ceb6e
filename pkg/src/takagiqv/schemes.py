"""Coefficient schemes: rules (m, k) -> theta in {-1, +1}.

A scheme fixes one member of the function class studied here -- the sum
over all generations of theta(m,k) * e(m,k).  Builtin schemes cover the
named functions of interest (all_plus, the alternating families, the
half-split oscillation extremizer) plus seeded Bernoulli draws; arbitrary
finite tables can be loaded from text files.

Scheme spec strings use a small grammar, ``name[:param[:param]]``:

    all_plus | alt_m | alt_mk | block:P | half_split | neg_half_split
    | bernoulli:P_PLUS:SEED | file:PATH
"""

from __future__ import annotations

import hashlib
import re
from fractions import Fraction
from pathlib import Path

import numpy as np

_FRACTION_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class SchemeDepthError(LookupError):
    """A finite-depth scheme was queried beyond the data it holds."""


def _check_index(m: int, k: int) -> None:
    if m < 0:
        raise ValueError(f"generation m must be >= 0, got {m}")
    if not 0 <= k < (1 << m):
        raise ValueError(f"translate k={k} out of range [0, 2**{m})")


def parse_exact_fraction(text: str) -> Fraction:
    """Parse 'p/q' or 'p' exactly; decimal notation is rejected."""
    if not _FRACTION_RE.match(text):
        raise ValueError(f"not an exact fraction: {text!r}")
    return Fraction(text)


class CoefficientScheme:
    """Base class; subclasses define theta(m, k) for 0 <= k < 2**m."""

    spec: str  # canonical spec string, set by subclasses

    def theta(self, m: int, k: int) -> int:
        raise NotImplementedError

    def row(self, m: int) -> np.ndarray:
        """All coefficients of one generation as an int64 array of +/-1."""
        if m < 0:
            raise ValueError(f"generation m must be >= 0, got {m}")
        return np.array([self.theta(m, k) for k in range(1 << m)], dtype=np.int64)

    def negated(self) -> CoefficientScheme:
        return _Negated(self)

    def __repr__(self) -> str:
        return f"<scheme {self.spec}>"


class _Negated(CoefficientScheme):
    def __init__(self, inner: CoefficientScheme) -> None:
        self.inner = inner
        self.spec = f"neg({inner.spec})"

    def theta(self, m: int, k: int) -> int:
        return -self.inner.theta(m, k)

    def row(self, m: int) -> np.ndarray:
        return -self.inner.row(m)

    def negated(self) -> CoefficientScheme:
        return self.inner


class AllPlus(CoefficientScheme):
    """theta(m,k) = +1: the pointwise-maximal member of the class."""

    spec = "all_plus"

    def theta(self, m: int, k: int) -> int:
        _check_index(m, k)
        return 1

    def row(self, m: int) -> np.ndarray:
        return np.ones(1 << m, dtype=np.int64)


class AlternatingM(CoefficientScheme):
    """theta(m,k) = (-1)**m: sign flips with each generation."""

    spec = "alt_m"

    def theta(self, m: int, k: int) -> int:
        _check_index(m, k)
        return -1 if m % 2 else 1

    def row(self, m: int) -> np.ndarray:
        return np.full(1 << m, -1 if m % 2 else 1, dtype=np.int64)


class AlternatingMK(CoefficientScheme):
    """theta(m,k) = (-1)**(m+k)."""

    spec = "alt_mk"

    def theta(self, m: int, k: int) -> int:
        _check_index(m, k)
        return -1 if (m + k) % 2 else 1

    def row(self, m: int) -> np.ndarray:
        out = np.empty(1 << m, dtype=np.int64)
        s = -1 if m % 2 else 1
        out[0::2] = s
        out[1::2] = -s
        return out


class Block(CoefficientScheme):
    """theta(m,k) = (-1)**floor(m/p): sign flips every p generations."""

    def __init__(self, period: int) -> None:
        if period < 1:
            raise ValueError("block period must be >= 1")
        self.period = period
        self.spec = f"block:{period}"

    def theta(self, m: int, k: int) -> int:
        _check_index(m, k)
        return -1 if (m // self.period) % 2 else 1

    def row(self, m: int) -> np.ndarray:
        return np.full(1 << m, self.theta(m, 0), dtype=np.int64)


class HalfSplit(CoefficientScheme):
    """+1 on the left half of each generation, -1 on the right.

    Generation zero is +1; for m >= 1 the sign is +1 iff k < 2**(m-1).
    The resulting function attains the maximal oscillation of the class.
    """

    spec = "half_split"

    def theta(self, m: int, k: int) -> int:
        _check_index(m, k)
        if m == 0:
            return 1
        return 1 if k < (1 << (m - 1)) else -1

    def row(self, m: int) -> np.ndarray:
        out = np.ones(1 << m, dtype=np.int64)
        if m >= 1:
            out[1 << (m - 1):] = -1
        return out


class NegHalfSplit(CoefficientScheme):
    """The sign-flipped half split (every theta negated)."""

    spec = "neg_half_split"

    _inner = HalfSplit()

    def theta(self, m: int, k: int) -> int:
        return -self._inner.theta(m, k)

    def row(self, m: int) -> np.ndarray:
        return -self._inner.row(m)


class Bernoulli(CoefficientScheme):
    """Deterministic i.i.d.-style draws: +1 with probability p_plus.

    Coefficients come from a keyed blake2b hash of (m, k), so any (m, k)
    is O(1) to query and the whole scheme is reproducible from the seed
    alone, independent of query order and platform.
    """

    def __init__(self, p_plus: Fraction, seed: int) -> None:
        if not 0 <= p_plus <= 1:
            raise ValueError("p_plus must lie in [0, 1]")
        self.p_plus = Fraction(p_plus)
        self.seed = seed
        self.spec = f"bernoulli:{p_plus}:{seed}"
        self._key = seed.to_bytes(8, "little", signed=True)

    def theta(self, m: int, k: int) -> int:
        _check_index(m, k)
        digest = hashlib.blake2b(
            f"{m}:{k}".encode(), digest_size=8, key=self._key
        ).digest()
        u = int.from_bytes(digest, "little")
        # +1 iff u/2**64 < p_plus, decided by exact integer comparison
        if u * self.p_plus.denominator < self.p_plus.numerator << 64:
            return 1
        return -1


class Explicit(CoefficientScheme):
    """A finite table of coefficients for generations m < depth."""

    def __init__(self, table: dict[tuple[int, int], int], depth: int,
                 spec: str = "explicit") -> None:
        if depth < 1:
            raise ValueError("depth must be >= 1")
        for m in range(depth):
            for k in range(1 << m):
                s = table.get((m, k))
                if s not in (1, -1):
                    raise ValueError(f"table incomplete or invalid at (m={m}, k={k})")
        self.table = dict(table)
        self.depth = depth
        self.spec = spec

    def theta(self, m: int, k: int) -> int:
        _check_index(m, k)
        if m >= self.depth:
            raise SchemeDepthError(
                f"generation {m} beyond explicit depth {self.depth}"
            )
        return self.table[(m, k)]

    @classmethod
    def load(cls, path: str | Path) -> Explicit:
        """Read the text format: header ``depth D``, then lines ``m k s``."""
        lines = Path(path).read_text().split("\n")
        body = [ln.strip() for ln in lines if ln.strip() and not ln.startswith("#")]
        if not body or not body[0].startswith("depth"):
            raise ValueError("explicit scheme file must start with 'depth D'")
        depth = int(body[0].split()[1])
        table: dict[tuple[int, int], int] = {}
        for ln in body[1:]:
            fields = ln.split()
            if len(fields) != 3 or fields[2] not in ("+1", "-1", "1"):
                raise ValueError(f"bad scheme file line: {ln!r}")
            table[(int(fields[0]), int(fields[1]))] = 1 if fields[2] in ("+1", "1") else -1
        return cls(table, depth, spec=f"file:{path}")

    def save(self, path: str | Path) -> None:
        rows = [f"depth {self.depth}"]
        for m in range(self.depth):
            for k in range(1 << m):
                s = self.table[(m, k)]
                rows.append(f"{m} {k} {'+1' if s > 0 else '-1'}")
        Path(path).write_text("\n".join(rows) + "\n")


#: Deterministic named schemes, in a stable order (used by scan suites).
BUILTIN_NAMES = ("all_plus", "alt_m", "alt_mk", "block:5", "half_split", "neg_half_split")


def parse_scheme(spec: str) -> CoefficientScheme:
    """Build a scheme from its spec string (see module docstring)."""
    name, _, rest = spec.partition(":")
    if name == "file":
        if not rest:
            raise ValueError("file scheme needs a path: file:PATH")
        return Explicit.load(rest)
    params = rest.split(":") if rest else []
    if name == "all_plus" and not params:
        return AllPlus()
    if name == "alt_m" and not params:
        return AlternatingM()
    if name == "alt_mk" and not params:
        return AlternatingMK()
    if name == "block" and len(params) == 1:
        return Block(int(params[0]))
    if name == "half_split" and not params:
        return HalfSplit()
    if name == "neg_half_split" and not params:
        return NegHalfSplit()
    if name == "bernoulli" and len(params) == 2:
        return Bernoulli(parse_exact_fraction(params[0]), int(params[1]))
    raise ValueError(f"unrecognized scheme spec: {spec!r}")
