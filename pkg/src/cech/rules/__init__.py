from src.cech.rules.base import BaseRule, RuleOutcome
from src.cech.rules.degree import DegreeZeroRule, VanishingRule
from src.cech.rules.runge import RungeAnyRule
from src.cech.rules.split import SplitQuasiSplitRule, SplitRungeRule, SplitSplitRule

__all__ = [
    "BaseRule",
    "DegreeZeroRule",
    "RuleOutcome",
    "RungeAnyRule",
    "SplitQuasiSplitRule",
    "SplitRungeRule",
    "SplitSplitRule",
    "VanishingRule",
]
