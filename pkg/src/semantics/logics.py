"""The eight presentations of the six standard intuitionistic logics.

Each logic is a model class plus a language flag. CD and Bi share the
satisfaction relation of IL and differ only in which models are admissible.
"""

from enum import Enum

from src.errors import AdmissibilityError, UsageError
from src.kripke.model import ClassFlags, KripkeModel
from src.kripke.validation import classify_model


class Logic(Enum):
    IL = ('IL', 'any', False)
    ILeq = ('ILeq', 'any', True)
    In = ('In', 'In', False)
    Ineq = ('Ineq', 'In', True)
    CD = ('CD', 'Su', False)
    CDeq = ('CDeq', 'Su', True)
    Bi = ('Bi', 'Bi', False)
    Bieq = ('Bieq', 'Bi', True)

    def __init__(self, label: str, model_class: str, with_equality: bool):
        self.label = label
        self.model_class = model_class
        self.with_equality = with_equality

    def __str__(self):
        return self.label

    @classmethod
    def parse(cls, text: str) -> 'Logic':
        """Accept 'IL', 'ILeq', 'IL≡', 'IL=' and the like"""
        key = text.strip().replace('≡', 'eq').replace('=', 'eq')
        for logic in cls:
            if logic.label.lower() == key.lower():
                return logic
        raise UsageError(f"unknown logic '{text}' (expected one of "
                         f"{', '.join(l.label for l in cls)})")

    def equality_free(self) -> 'Logic':
        return Logic[self.label.replace('eq', '')]

    def with_equality_variant(self) -> 'Logic':
        return self if self.with_equality else Logic[self.label + 'eq']

    def admits(self, flags: ClassFlags) -> bool:
        if self.model_class == 'In':
            return flags.in_class
        if self.model_class == 'Su':
            return flags.su_class
        if self.model_class == 'Bi':
            return flags.bi_class
        return True


def check_admissible(logic: Logic, m: KripkeModel) -> None:
    """
    Raise unless m lies in the model class of logic.

    Raises:
        AdmissibilityError: Naming the logic and the failing class
        PreconditionError: If m is invalid
    """
    if logic.model_class == 'any':
        return
    flags = classify_model(m)
    if not logic.admits(flags):
        raise AdmissibilityError(
            f"model is not admissible for {logic}: it is not in the {logic.model_class} "
            f"class (in={flags.in_class}, su={flags.su_class})"
        )


def is_admissible(logic: Logic, m: KripkeModel) -> bool:
    return logic.model_class == 'any' or logic.admits(classify_model(m))
