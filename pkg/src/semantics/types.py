"""Successor, existential and universal types of finite candidates, their
realization, and the formulas that express them."""

from typing import Iterable, Optional, Sequence, Tuple, Union

from src.errors import PreconditionError
from src.kripke.algebra import constant_extension, submodel_violations
from src.kripke.model import Element, KripkeModel
from src.semantics.evaluator import Evaluator
from src.semantics.logics import Logic
from src.semantics.theories import FormulaPair, is_elementary_submodel_upto
from src.syntax.formula import Formula, Implies, conjunction, disjunction
from src.syntax.printer import print_formula
from src.syntax.signature import fresh_constants
from src.syntax.substitution import quantify_constant

TYPE_KINDS = ('successor', 'existential', 'universal')

Candidate = Union[FormulaPair, Iterable[Formula]]


def _as_pair(candidate: Candidate) -> FormulaPair:
    if isinstance(candidate, FormulaPair):
        return candidate
    return FormulaPair.of(candidate)


def type_constants(m: KripkeModel, n: int, kind: str,
                   constants: Optional[Sequence[str]] = None) -> Tuple[str, ...]:
    """c1..cn for successor types, c1..c(n+1) for existential/universal ones"""
    if kind not in TYPE_KINDS:
        raise PreconditionError(f"unknown type kind '{kind}'")
    count = n if kind == 'successor' else n + 1
    if constants is None:
        return fresh_constants(m.signature, count)
    constants = tuple(constants)
    if len(constants) != count:
        raise PreconditionError(
            f"wrong constant count: {kind} types of {n}-tuples need {count} constants, "
            f"got {len(constants)}"
        )
    return constants


def _check_candidate(m: KripkeModel, pair: FormulaPair, constants: Tuple[str, ...]) -> None:
    allowed = m.signature.constants | set(constants)
    for f in pair.formulas():
        if not f.is_sentence():
            raise PreconditionError(f"candidate formula {f} is not a sentence")
        extra = f.constants() - allowed
        if extra:
            raise PreconditionError(
                f"wrong constant count: {f} uses constants {sorted(extra)} outside "
                f"the signature and {list(constants)}"
            )


def find_type_witness(logic: Logic, m: KripkeModel, w: str, elements: Sequence[Element],
                      candidate: Candidate, kind: str,
                      constants: Optional[Sequence[str]] = None
                      ) -> Optional[Tuple[str, Optional[Element]]]:
    """
    Search the witness required by a finite type.

    Returns:
        (world, element) for existential/universal kinds, (world, None)
        for successor types, or None when the candidate is not a type
    """
    elements = tuple(elements)
    constants = type_constants(m, len(elements), kind, constants)
    pair = _as_pair(candidate)
    _check_candidate(m, pair, constants)

    if kind == 'successor':
        extended = constant_extension(m, w, constants, elements)
        evaluator = Evaluator(logic, extended)
        for v in extended.worlds:
            if _satisfies(evaluator, v, pair):
                return v, None
        return None

    if kind == 'existential':
        for a in m.sorted_domain(w):
            extended = constant_extension(m, w, constants, elements + (a,))
            if all(Evaluator(logic, extended).holds(w, f, {}) for f in pair.gamma):
                return w, a
        return None

    for v in m.successors(w):
        pushed = m.push(w, v, elements)
        for b in m.sorted_domain(v):
            extended = constant_extension(m, v, constants, pushed + (b,))
            evaluator = Evaluator(logic, extended)
            if not any(evaluator.holds(v, f, {}) for f in pair.gamma):
                return v, b
    return None


def _satisfies(evaluator: Evaluator, v: str, pair: FormulaPair) -> bool:
    return (all(evaluator.holds(v, f, {}) for f in pair.gamma)
            and not any(evaluator.holds(v, f, {}) for f in pair.delta))


def classify_finite_type(logic: Logic, m: KripkeModel, w: str, elements: Sequence[Element],
                         candidate: Candidate, kind: str,
                         constants: Optional[Sequence[str]] = None) -> bool:
    """
    Decide whether a finite candidate is a successor/existential/universal
    type of (m, w, elements).

    For finite candidates the finite-subset condition collapses to one
    witness search:

        successor    some v above w satisfies the pair under c/H_wv(a)
        existential  some a' in A_w makes every formula true under c/a a'
        universal    some v above w and b in A_v make every formula false

    Args:
        candidate: FormulaPair for successor types; a formula set (or the
            gamma side of a pair) for existential and universal ones
        constants: Constant names (default c1..cn or c1..c(n+1))

    Raises:
        PreconditionError: Unknown kind, wrong constant count or open
            candidate formulas
    """
    return find_type_witness(logic, m, w, elements, candidate, kind, constants) is not None


def is_type_realized(logic: Logic, m: KripkeModel, n: KripkeModel, w: str,
                     elements: Sequence[Element], candidate: Candidate, kind: str,
                     constants: Optional[Sequence[str]] = None,
                     rank_bound: Optional[int] = None,
                     check_elementary: bool = True) -> bool:
    """
    Realization in an elementary extension n of m.

    The witness is searched in n: a successor v of w in n, an element of
    B_w, or a successor with an element.

    Raises:
        PreconditionError: If m is not a submodel (or not an elementary one
            at rank_bound when check_elementary is set) of n, or the
            candidate is not a type of (m, w, elements)
    """
    problems = submodel_violations(m, n)
    if problems:
        raise PreconditionError(f"not a submodel: {problems[0]}")
    if check_elementary and not is_elementary_submodel_upto(logic, m, n, rank_bound):
        raise PreconditionError("not an elementary submodel at the working rank")
    if not classify_finite_type(logic, m, w, elements, candidate, kind, constants):
        raise PreconditionError(f"candidate is not a {kind} type of the tuple")
    return find_type_witness(logic, n, w, elements, candidate, kind, constants) is not None


# Type formulas
# -----------------------------------------------------------------------------

def successor_type_formula(pair: FormulaPair) -> Formula:
    """/\\gamma -> \\/delta; its failure at w is the successor-type condition"""
    return Implies(conjunction(_sorted(pair.gamma)), disjunction(_sorted(pair.delta)))


def existential_type_formula(formulas: Iterable[Formula], constant: str) -> Formula:
    """exists x. /\\formulas(constant/x)"""
    return quantify_constant(conjunction(_sorted(formulas)), constant, 'exists')


def universal_type_formula(formulas: Iterable[Formula], constant: str) -> Formula:
    """forall x. \\/formulas(constant/x); its failure is the universal-type condition"""
    return quantify_constant(disjunction(_sorted(formulas)), constant, 'forall')


def _sorted(formulas: Iterable[Formula]):
    return sorted(formulas, key=print_formula)
