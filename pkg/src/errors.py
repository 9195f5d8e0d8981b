"""Exception hierarchy for the workbench.

Every error carries the process exit code the CLI reports for it:
2 for usage and parse problems, 1 for semantic refusals.
"""

from typing import Optional


class WorkbenchError(Exception):
    """Base class for all workbench errors"""

    exit_code = 1


class UsageError(WorkbenchError):
    """Bad command-line usage or unknown names"""

    exit_code = 2


class FormulaSyntaxError(WorkbenchError):
    """Formula text does not conform to the grammar"""

    exit_code = 2

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at char {position})"
        super().__init__(message)


class SignatureError(WorkbenchError):
    """Symbol missing from, or inconsistent with, a signature"""

    exit_code = 2


class ModelFormatError(WorkbenchError):
    """Model file cannot be read into a model"""

    exit_code = 2


class UnknownWorldError(WorkbenchError):
    exit_code = 2

    def __init__(self, world: str):
        self.world = world
        super().__init__(f"unknown world '{world}'")


class AdmissibilityError(WorkbenchError):
    """Model lies outside the model class of the requested logic"""


class EvaluationError(WorkbenchError):
    """Evaluation request is malformed (tuple/world mismatch, unbound variables)"""


class SubstitutionError(WorkbenchError):
    """Substitution, abstraction or renaming preconditions fail"""


class PreconditionError(WorkbenchError):
    """Operation called outside its documented precondition"""


class ModelConstructionError(WorkbenchError):
    """A model-algebra construction cannot be carried out"""


class BudgetExceededError(WorkbenchError):
    """Position space larger than the configured budget"""

    def __init__(self, bound: int, budget: int):
        self.bound = bound
        self.budget = budget
        super().__init__(
            f"position space bound {bound} exceeds budget {budget}"
        )


class AsimulationError(WorkbenchError):
    """Malformed asimulation pair or relation"""


class CongruenceError(WorkbenchError):
    """Relation is not a congruence on the model"""


class EmbeddingError(WorkbenchError):
    """Maps fail the embedding conditions"""


class GenerationError(WorkbenchError):
    """Random generator could not meet the requested constraints"""
