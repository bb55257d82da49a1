"""
Runge / split / quasi-split classification of Stein pairs.
"""

from src.pairs.classifier import classify_pair, classify_product_pair
from src.pairs.models import PairClass, PairRule, PairTag

__all__ = ["PairClass", "PairRule", "PairTag", "classify_pair", "classify_product_pair"]
