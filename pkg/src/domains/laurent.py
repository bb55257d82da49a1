"""
Laurent models: a space of convergent Laurent series described by its spectrum
(the allowed exponents) and the domain on which the series converge.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, InstanceOf, model_validator

from src.core.errors import DimensionMismatchError, DomainValidationError
from src.domains.models import Disc, ReinhardtBoxDomain
from src.domains.operations import natural_domain, spectrum_of
from src.lattice import LatticeBox, Spectrum


class LaurentModel(BaseModel):
    """
    Series sum a_k z^k with k in spectrum, converging on convergence.

    A model is only realizable when no exponent is negative on a coordinate
    whose convergence factor is a disc.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    spectrum: InstanceOf[Spectrum]
    convergence: ReinhardtBoxDomain

    @model_validator(mode="after")
    def _check_realizable(self) -> LaurentModel:
        if self.spectrum.dimension != self.convergence.dimension:
            raise DimensionMismatchError(self.convergence.dimension, self.spectrum.dimension, "LaurentModel")
        for box in self.spectrum.boxes:
            for axis, factor in enumerate(self.convergence.factors):
                if isinstance(factor, Disc) and box.lo[axis] < 0:
                    raise DomainValidationError(
                        f"spectrum {self.spectrum} has negative exponents on disc coordinate {axis} of {self.convergence}"
                    )
        return self

    @classmethod
    def natural(cls, spectrum: Spectrum, base: ReinhardtBoxDomain) -> LaurentModel:
        """Attach the natural domain of convergence to a single-box spectrum; keep base otherwise."""
        if spectrum.is_single_box():
            return cls(spectrum=spectrum, convergence=natural_domain(spectrum, base))
        return cls(spectrum=spectrum, convergence=base)

    @classmethod
    def of_domain(cls, domain: ReinhardtBoxDomain) -> LaurentModel:
        """All holomorphic functions on the domain."""
        return cls(spectrum=spectrum_of(domain), convergence=domain)

    @classmethod
    def empty(cls, base: ReinhardtBoxDomain) -> LaurentModel:
        return cls(spectrum=Spectrum.empty(base.dimension), convergence=base)

    @property
    def dimension(self) -> int:
        return self.spectrum.dimension

    def is_empty(self) -> bool:
        return self.spectrum.is_empty()

    def tensor(self, other: LaurentModel) -> LaurentModel:
        """Completed tensor product: spectra and domains multiply."""
        return LaurentModel(
            spectrum=self.spectrum.product(other.spectrum),
            convergence=self.convergence.product(other.convergence),
        )

    def transpose(self, permutation: tuple[int, ...]) -> LaurentModel:
        return LaurentModel(
            spectrum=self.spectrum.transpose(permutation),
            convergence=self.convergence.transpose(permutation),
        )

    def pieces(self) -> list[tuple[LatticeBox, ReinhardtBoxDomain]]:
        """Each canonical box with its own natural domain of convergence."""
        return [(box, natural_domain(box, self.convergence)) for box in self.spectrum.boxes]

    def __str__(self) -> str:
        return f"{{k ∈ {self.spectrum}}} on {self.convergence}"
