"""Structural laws of Kripke models and the In/Su/Bi classes"""

from dataclasses import dataclass
from itertools import product
from typing import List, Tuple

from src.errors import PreconditionError
from src.kripke.model import ClassFlags, KripkeModel


@dataclass(frozen=True)
class Diagnostic:
    """One violated law with the witnesses that show it"""

    law: str
    message: str
    witnesses: Tuple[str, ...] = ()

    def __str__(self):
        return f"[{self.law}] {self.message}"


def validate_model(m: KripkeModel) -> List[Diagnostic]:
    """
    Check every model law and return the violations.

    Laws: non-empty frame, partial order, world-qualified (hence disjoint)
    domains, interpretations inside domains, total constant denotations,
    total homs into the right domains, identity and composition laws,
    preservation of predicates and constants.

    Returns:
        Diagnostics; empty iff the model is valid
    """
    diagnostics: List[Diagnostic] = []

    def report(law, message, *witnesses):
        diagnostics.append(Diagnostic(law, message, tuple(str(w) for w in witnesses)))

    if not m.worlds:
        report('nonempty-worlds', "model has no worlds")
        return diagnostics

    _check_order(m, report)

    for w in m.worlds:
        for e in m.domains[w]:
            if e.world != w:
                report('disjointness', f"element {e} listed in the domain of '{w}'", e, w)

        for name, arity in m.signature.predicates:
            for args in m.extension(w, name):
                if len(args) != arity:
                    report('interpretation', f"{name} at '{w}' holds a tuple of length "
                           f"{len(args)}, arity is {arity}", w, name)
                elif any(a not in m.domains[w] for a in args):
                    report('interpretation', f"{name} at '{w}' mentions elements outside A_{w}",
                           w, name)

        for c in sorted(m.signature.constants):
            denotation = m.constants[w].get(c)
            if denotation is None:
                report('constant-denotation', f"constant '{c}' has no denotation at '{w}'", w, c)
            elif denotation not in m.domains[w]:
                report('constant-denotation', f"constant '{c}' denotes {denotation} "
                       f"outside A_{w}", w, c)

    if diagnostics:
        return diagnostics

    _check_homs(m, report)
    return diagnostics


def _check_order(m: KripkeModel, report) -> None:
    for w in m.worlds:
        if (w, w) not in m.order:
            report('reflexivity', f"'{w}' is not below itself", w)
    for w, v in sorted(m.order):
        if w not in m.domains or v not in m.domains:
            report('reflexivity', f"order mentions unknown world in ({w}, {v})", w, v)
            continue
        if w != v and (v, w) in m.order and w < v:
            report('antisymmetry', f"'{w}' and '{v}' lie below each other", w, v)
        for u in m.worlds:
            if (v, u) in m.order and (w, u) not in m.order:
                report('transitivity', f"{w} <= {v} <= {u} but not {w} <= {u}", w, v, u)


def _check_homs(m: KripkeModel, report) -> None:
    for w, v in sorted(m.homs):
        if (w, v) not in m.order:
            report('hom-order', f"homomorphism given for {w}, {v} which are not ordered", w, v)

    for w, v in sorted(m.order):
        mapping = m.homs.get((w, v))
        if mapping is None:
            report('hom-missing', f"no homomorphism for {w} <= {v}", w, v)
            continue
        missing = [a for a in m.domains[w] if a not in mapping]
        if missing:
            report('hom-totality', f"H_{w}{v} undefined on {sorted(map(str, missing))}", w, v)
            continue
        stray = [b for b in mapping.values() if b not in m.domains[v]]
        if stray:
            report('hom-codomain', f"H_{w}{v} maps outside A_{v}", w, v, *stray)
            continue

        if w == v and any(mapping[a] != a for a in m.domains[w]):
            report('hom-identity', f"H_{w}{w} is not the identity", w)

        for name, _ in m.signature.predicates:
            for args in sorted(m.extension(w, name)):
                image = tuple(mapping[a] for a in args)
                if image not in m.extension(v, name):
                    report('hom-preservation', f"{name}{tuple(map(str, args))} at '{w}' "
                           f"not preserved at '{v}'", w, v, name)
                    break

        for c in sorted(m.signature.constants):
            if mapping[m.constants[w][c]] != m.constants[v][c]:
                report('constant-coherence', f"H_{w}{v}(I_{w}({c})) != I_{v}({c})", w, v, c)

    for w, v, u in product(m.worlds, repeat=3):
        if (w, v) in m.order and (v, u) in m.order:
            first, second, direct = m.homs.get((w, v)), m.homs.get((v, u)), m.homs.get((w, u))
            if first is None or second is None or direct is None:
                continue
            for a in m.domains[w]:
                if a in first and first[a] in second and second[first[a]] != direct.get(a):
                    report('hom-composition', f"H_{w}{u} != H_{v}{u} o H_{w}{v} at {a}",
                           w, v, u, a)
                    break


def is_valid(m: KripkeModel) -> bool:
    return not validate_model(m)


def require_valid(m: KripkeModel) -> None:
    diagnostics = validate_model(m)
    if diagnostics:
        raise PreconditionError(f"invalid model: {diagnostics[0]}")


def classify_model(m: KripkeModel) -> ClassFlags:
    """
    Decide membership in In (injective homs) and Su (surjective homs).

    Raises:
        PreconditionError: If the model is invalid
    """
    require_valid(m)
    injective = True
    surjective = True
    for (w, v), mapping in m.homs.items():
        if (w, v) not in m.order:
            continue
        image = {mapping[a] for a in m.domains[w]}
        if len(image) < len(m.domains[w]):
            injective = False
        if image != set(m.domains[v]):
            surjective = False
    return ClassFlags(injective, surjective)
