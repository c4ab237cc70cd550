#!/usr/bin/env python3
"""Level-by-level trace of Apriori and IAR on the four-transaction toy database.

Items are coded A=1, B=2, C=3, D=4, E=5. IAR uses attribute B.
"""

from iarmine.core import parse_transaction_file
from iarmine.miner import apriori, iar
from iarmine.rules import generate_rules

LETTERS = " ABCDE"
TOY = "1 2\n1 2 5\n1 2 3 5\n3 4\n"


def name(x):
    return "".join(LETTERS[i] for i in x)


def trace(title, result):
    print(f"== {title} (scanned {result.working_db_size} transactions, min count {result.min_count})")
    supports = result.supports()
    for level in result.levels:
        print(f"  C{level.k}: {' '.join(name(c) for c in level.candidates)}")
        print(f"  L{level.k}: {' '.join(f'{name(x)}:{supports[x]}' for x in level.frequent) or '-'}")
    m = result.metrics
    print(f"  nodes peak={m.node_count} final={m.final_node_count} "
          f"updates={m.update_count} bytes={m.storage_bytes}")


def main():
    db = parse_transaction_file(TOY)
    full = apriori(db, 2)
    trace("Apriori", full)
    constrained = iar(db, (2,), 2)
    trace("IAR, attribute B", constrained)
    print("== rules with B on the left, min_conf 1")
    for rule in generate_rules(constrained.frequent, 1, required_antecedent=(2,)):
        print(f"  {name(rule.antecedent)} -> {name(rule.consequent)} "
              f"supp={rule.support} conf={rule.confidence}")


if __name__ == "__main__":
    main()
