"""
The building blocks of property suites.

A suite is a named trial function plus the dimensions it runs at. A trial
receives a `TrialContext` carrying its own seeded generator and records
every sampled input on the context as soon as it is drawn, so a trial that
raises still leaves reproduction data behind.
"""
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

import numpy as np

from src.domain.entities.block_symplectic import BlockSymplectic
from src.domain.entities.siegel_point import SiegelPoint
from src.domain.value_objects.matrix import ComplexMatrix, frozen
from src.domain.value_objects.tolerance import Tolerance
from src.usecases.exceptions import UnknownSuiteError
from src.usecases.v1.schemas.base.matrix_document import MatrixDocument


@dataclass
class TrialContext:
    """Everything a single trial may use."""

    index: int
    n: int
    rng: np.random.Generator
    tol: Tolerance
    samples_per_map: int
    path_steps: int
    inputs: dict[str, MatrixDocument] = field(default_factory=dict)

    def block(self, name: str, s: BlockSymplectic) -> BlockSymplectic:
        self.inputs[name] = MatrixDocument.from_matrix(s.s, "symplectic")
        return s

    def point(self, name: str, z: SiegelPoint) -> SiegelPoint:
        self.inputs[name] = MatrixDocument.from_matrix(z.z, "siegel_point")
        return z

    def matrix(self, name: str, m: ComplexMatrix) -> ComplexMatrix:
        self.inputs[name] = MatrixDocument.from_matrix(frozen(m), "matrix")
        return m


@dataclass(frozen=True)
class TrialOutcome:
    """
    Attributes:
        passed: Whether the property held.
        defect: The measured violation (smaller is better), if any.
        observed: Short description of what happened.
        expected: Short description of what the property demands.
        tallies: Outcome categories to count across the run.
        candidates: (label, note) pairs worth keeping for inspection.
    """

    passed: bool
    defect: float | None
    observed: str
    expected: str
    tallies: tuple[str, ...] = ()
    candidates: tuple[tuple[str, str], ...] = ()


TrialFn = Callable[[TrialContext], TrialOutcome]


@dataclass(frozen=True)
class PropertySuite:
    name: str
    description: str
    dims: tuple[int, ...]
    trial: TrialFn

    def dimension_for(self, index: int) -> int:
        """Cycles through `dims` by trial index."""
        return self.dims[index % len(self.dims)]


class SuiteRegistry:
    """A fixed, ordered set of named suites."""

    def __init__(self) -> None:
        self._suites: dict[str, PropertySuite] = {}

    def register(
        self, name: str, description: str, dims: tuple[int, ...]
    ) -> Callable[[TrialFn], TrialFn]:
        def decorator(trial: TrialFn) -> TrialFn:
            if name in self._suites:
                raise ValueError(f"Suite '{name}' is already registered.")
            self._suites[name] = PropertySuite(
                name=name, description=description, dims=dims, trial=trial
            )
            return trial

        return decorator

    def get(self, name: str) -> PropertySuite:
        """
        Raises:
            UnknownSuiteError: If no suite has this name.
        """
        try:
            return self._suites[name]
        except KeyError:
            raise UnknownSuiteError(name, self.names()) from None

    def names(self) -> list[str]:
        return list(self._suites)

    def __iter__(self) -> Iterator[PropertySuite]:
        return iter(self._suites.values())
