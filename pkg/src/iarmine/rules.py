"""Association rules from frequent itemsets.

Confidence is an exact :class:`~fractions.Fraction`,
``count(antecedent | consequent) / count(antecedent)``, so threshold
comparisons never suffer float ties.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .core import Itemset, format_itemset, itemset


class UndefinedConfidence(ZeroDivisionError):
    pass


class InvariantViolation(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class AssociationRule:
    antecedent: Itemset
    consequent: Itemset
    support: int
    confidence: Fraction

    def __str__(self) -> str:
        return (f"{format_itemset(self.antecedent)} -> {format_itemset(self.consequent)}"
                f" supp={self.support} conf={format_confidence(self.confidence)}")


def confidence(support_union: int, support_antecedent: int) -> Fraction:
    if support_antecedent <= 0:
        raise UndefinedConfidence("antecedent support is zero")
    if support_union < 0 or support_union > support_antecedent:
        raise InvariantViolation(
            f"union support {support_union} exceeds antecedent support {support_antecedent}")
    return Fraction(support_union, support_antecedent)


def format_confidence(conf: Fraction, places: int = 4) -> str:
    q = Decimal(1).scaleb(-places)
    value = Decimal(conf.numerator) / Decimal(conf.denominator)
    return str(value.quantize(q, rounding=ROUND_HALF_EVEN))


def generate_rules(frequent: Iterable[tuple[Itemset, int]], min_conf,
                   required_antecedent: Sequence[int] | None = None) -> list[AssociationRule]:
    """All rules ``Y -> X - Y`` with confidence >= ``min_conf``.

    ``frequent`` must be downward closed. With ``required_antecedent`` set,
    only rules whose antecedent contains all of it are kept.
    """
    min_conf = Fraction(repr(min_conf)) if isinstance(min_conf, float) else Fraction(min_conf)
    if not 0 <= min_conf <= 1:
        raise ValueError(f"min_conf must be in [0, 1], got {min_conf}")
    required = set(itemset(required_antecedent)) if required_antecedent else None
    supports = dict(frequent)
    rules: list[AssociationRule] = []
    for x, sup_x in supports.items():
        if len(x) < 2:
            continue
        if required is not None and not required.issubset(x):
            continue
        for r in range(1, len(x)):
            for y in combinations(x, r):
                if required is not None and not required.issubset(y):
                    continue
                sup_y = supports.get(y)
                if sup_y is None:
                    raise InvariantViolation(
                        f"support of antecedent {y} missing; input is not downward closed")
                conf = confidence(sup_x, sup_y)
                if conf >= min_conf:
                    rest = tuple(i for i in x if i not in y)
                    rules.append(AssociationRule(y, rest, sup_x, conf))
    rules.sort(key=lambda rule: (rule.antecedent, rule.consequent))
    return rules
