"""Apriori and Interactive Apriori (IAR) over an instrumented T-tree."""

from .core import (Itemset, ParseError, StructuralError, SupportThreshold,
                   TransactionDb, filter_database, itemset, parse_transaction_file,
                   serialize, support_count_oracle, transaction_contains)
from .miner import MiningConfig, MiningResult, apriori, generate_candidates, iar, mine
from .rules import AssociationRule, confidence, generate_rules
from .ttree import TTree, TTreeMetrics

__all__ = [
    "AssociationRule", "Itemset", "MiningConfig", "MiningResult", "ParseError",
    "StructuralError", "SupportThreshold", "TTree", "TTreeMetrics", "TransactionDb",
    "apriori", "confidence", "filter_database", "generate_candidates", "generate_rules",
    "iar", "itemset", "mine", "parse_transaction_file", "serialize",
    "support_count_oracle", "transaction_contains",
]
