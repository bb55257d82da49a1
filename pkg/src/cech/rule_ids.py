"""
Rule identifiers for the cohomology decision engine.

Every report carries a justification trail built from these identifiers,
their anchors (short labels of the underlying result) and one-line statements.
"""

from enum import StrEnum


class RuleID(StrEnum):
    """
    Standardized identifiers of the engine's decision rules.
    """

    VANISHING = "vanishing"
    DEGREE_ZERO = "degree-zero"
    SPLIT_SPLIT = "split-split"
    SPLIT_QUASI_SPLIT = "split-quasi-split"
    SPLIT_RUNGE = "split-runge"
    RUNGE_ANY = "runge-any"
    QUASI_UNDETERMINED = "quasi-undetermined"
    SYMMETRY = "symmetry"
    MULTIPLICITY = "multiplicity"


RULE_ID_TO_ANCHOR: dict[RuleID, str] = {
    RuleID.VANISHING: "two-set Stein cover: zero above degree one",
    RuleID.DEGREE_ZERO: "degree zero: functions extend to the envelope",
    RuleID.SPLIT_SPLIT: "split ⊗ split: Hausdorff and infinite-dimensional",
    RuleID.SPLIT_QUASI_SPLIT: "split ⊗ quasi-split: non-Hausdorff, but not indiscrete",
    RuleID.SPLIT_RUNGE: "split ⊗ Runge: indiscrete",
    RuleID.RUNGE_ANY: "Runge pair present: zero or indiscrete, nonzero on parallelizable figures",
    RuleID.QUASI_UNDETERMINED: "quasi-split beside Runge: finer decomposition undetermined",
    RuleID.SYMMETRY: "roles of the two pairs exchanged",
    RuleID.MULTIPLICITY: "trivial bundle of (p,0)-forms",
}

RULE_ID_TO_STATEMENT: dict[RuleID, str] = {
    RuleID.VANISHING: "A cover by two Stein open sets has no Čech cochains past degree one, so H^{p,q} = 0 for q > 1.",
    RuleID.DEGREE_ZERO: (
        "H^{0,0} is O(ℍ); Laurent expansions on U1 and U2 agree on U12, so the spectrum is S(U1) ∩ S(U2) "
        "and every function continues to the envelope of holomorphy."
    ),
    RuleID.SPLIT_SPLIT: "H^{0,1} ≅ Q(X0,X) ⊗̂ Q(Y0,Y), a nonzero Fréchet space.",
    RuleID.SPLIT_QUASI_SPLIT: (
        "H^{0,1} is the direct sum of the Hausdorff part Q(X0,X) ⊗̂ Q_r(Y0,Y) and the indiscrete quotient of "
        "Q(X0,X) ⊗̂ closure(O(Y)|Y0) by Q(X0,X) ⊗̂ O(Y)|Y0."
    ),
    RuleID.SPLIT_RUNGE: "H^{0,1} ≅ Q(X0,X) ⊗̂ O(Y0) / Q(X0,X) ⊗̂ O(Y)|Y0, the quotient by a dense subspace.",
    RuleID.RUNGE_ANY: (
        "O(U1)| + O(U2)| is dense in O(U12); all factors are planar so the figure is parallelizable and "
        "H^{0,1} is an indiscrete space of uncountable dimension."
    ),
    RuleID.QUASI_UNDETERMINED: (
        "The other pair is quasi-split and no split pair is available; only indiscreteness is certified."
    ),
    RuleID.SYMMETRY: "The split pair was moved first; spectra and domains are reported in the input coordinates.",
    RuleID.MULTIPLICITY: "Ω^p ≅ O^{C(N,p)} on products of planar domains, so H^{p,q} ≅ (H^{0,q})^{C(N,p)}.",
}
