"""Items, itemsets, transaction databases and support thresholds.

Itemsets are plain tuples of ascending positive ints. Use :func:`itemset`
to canonicalize arbitrary iterables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Itemset = tuple[int, ...]


class ParseError(ValueError):
    """Malformed transaction file. ``lineno`` is 1-based (0 if not line specific)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


class StructuralError(RuntimeError):
    """Internal data structure used out of order (a bug, not bad input)."""


def itemset(items: Iterable[int]) -> Itemset:
    """Return the canonical (sorted, duplicate-free) form of ``items``."""
    out = tuple(sorted(set(items)))
    if out and out[0] < 1:
        raise ValueError(f"item ids must be >= 1, got {out[0]}")
    return out


def is_canonical(x: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(x, x[1:])) and (not x or x[0] >= 1)


@dataclass(frozen=True)
class TransactionDb:
    """An ordered, immutable list of transactions over items ``1..universe_size``.

    The transaction index is the implicit transaction id.
    """

    universe_size: int
    transactions: tuple[Itemset, ...] = ()

    def __post_init__(self):
        if self.universe_size < 0:
            raise ValueError("universe_size must be non-negative")
        txs = tuple(tuple(t) for t in self.transactions)
        for t in txs:
            if not is_canonical(t):
                raise ValueError(f"transaction {t} is not canonical")
            if t and t[-1] > self.universe_size:
                raise ValueError(
                    f"item {t[-1]} exceeds universe size {self.universe_size}")
        object.__setattr__(self, "transactions", txs)

    @classmethod
    def from_iterables(cls, transactions: Iterable[Iterable[int]],
                       universe_size: int | None = None) -> "TransactionDb":
        txs = tuple(itemset(t) for t in transactions)
        if universe_size is None:
            universe_size = max((t[-1] for t in txs if t), default=0)
        return cls(universe_size, txs)

    def __len__(self) -> int:
        return len(self.transactions)

    def __iter__(self):
        return iter(self.transactions)


@dataclass(frozen=True)
class SupportThreshold:
    """Minimum support given either as a fraction of |D| or as an absolute count.

    Exactly one of ``fraction`` and ``count`` must be set. Floats are read
    through their shortest decimal repr, so ``0.2`` means exactly 1/5.
    """

    fraction: Fraction | None = None
    count: int | None = None

    def __post_init__(self):
        if (self.fraction is None) == (self.count is None):
            raise ValueError("give exactly one of fraction or count")
        if self.fraction is not None:
            frac = _exact_fraction(self.fraction)
            if not 0 < frac <= 1:
                raise ValueError(f"support fraction must be in (0, 1], got {frac}")
            object.__setattr__(self, "fraction", frac)
        elif isinstance(self.count, bool) or not isinstance(self.count, int) or self.count < 1:
            raise ValueError(f"support count must be a positive integer, got {self.count!r}")

    @classmethod
    def of(cls, value: "SupportThreshold | int | float | Fraction | str") -> "SupportThreshold":
        """Ints are absolute counts; floats, Fractions and decimal strings are fractions."""
        if isinstance(value, SupportThreshold):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(count=value)
        return cls(fraction=_exact_fraction(value))

    def resolve(self, n_reference: int) -> int:
        """Absolute minimum count against a reference database of ``n_reference`` transactions."""
        if self.count is not None:
            return self.count
        return max(1, math.ceil(self.fraction * n_reference))

    def __str__(self) -> str:
        if self.count is not None:
            return str(self.count)
        return _fraction_str(self.fraction)


def _exact_fraction(value) -> Fraction:
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def _fraction_str(f: Fraction) -> str:
    # terminating decimals print as decimals, others as p/q
    s = repr(float(f))
    return s if Fraction(s) == f else f"{f.numerator}/{f.denominator}"


def transaction_contains(t: Sequence[int], x: Sequence[int]) -> bool:
    """True iff canonical itemset ``x`` is a subset of canonical transaction ``t``."""
    if len(x) > len(t):
        return False
    i = 0
    n = len(t)
    for item in x:
        while i < n and t[i] < item:
            i += 1
        if i == n or t[i] != item:
            return False
        i += 1
    return True


def support_count_oracle(db: TransactionDb, x: Sequence[int]) -> int:
    """Count transactions containing ``x`` by a plain linear scan."""
    return sum(1 for t in db.transactions if transaction_contains(t, x))


def filter_database(db: TransactionDb, user_attrs: Sequence[int]) -> TransactionDb:
    """Keep only the transactions that contain every attribute in ``user_attrs``.

    Order and universe size are preserved.
    """
    attrs = itemset(user_attrs)
    if not attrs:
        raise ValueError("user_attrs must be non-empty; use plain Apriori instead")
    if attrs[-1] > db.universe_size:
        raise ValueError(
            f"attribute {attrs[-1]} outside universe 1..{db.universe_size}")
    kept = tuple(t for t in db.transactions if transaction_contains(t, attrs))
    return TransactionDb(db.universe_size, kept)


def parse_transaction_file(text: str | Iterable[str], *,
                           require_nonempty: bool = False) -> TransactionDb:
    """Parse the whitespace-separated transaction format.

    Blank lines and ``#`` comments are skipped. An optional first line
    ``#universe <m>`` fixes the universe size; otherwise it is the largest
    item seen.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    universe: int | None = None
    txs: list[Itemset] = []
    seen_content = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts and parts[0] == "universe":
                if seen_content or universe is not None:
                    raise ParseError("#universe header must come first", lineno)
                if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                    raise ParseError(f"bad universe header {line!r}", lineno)
                universe = int(parts[1])
            seen_content = True
            continue
        seen_content = True
        items = []
        for tok in line.split():
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"non-integer token {tok!r}", lineno) from None
            if v < 1:
                raise ParseError(f"item ids must be >= 1, got {v}", lineno)
            if universe is not None and v > universe:
                raise ParseError(f"item {v} exceeds #universe {universe}", lineno)
            items.append(v)
        txs.append(tuple(sorted(set(items))))
    if require_nonempty and not txs:
        raise ParseError("database is empty")
    if universe is None:
        universe = max((t[-1] for t in txs), default=0)
    return TransactionDb(universe, tuple(txs))


def serialize(db: TransactionDb, *, header: bool = True) -> str:
    """Render ``db`` in the transaction file format (inverse of parsing)."""
    out = [f"#universe {db.universe_size}"] if header and db.universe_size else []
    out.extend(" ".join(map(str, t)) for t in db.transactions)
    return "".join(line + "\n" for line in out)


def format_itemset(x: Sequence[int]) -> str:
    return ",".join(map(str, x))
