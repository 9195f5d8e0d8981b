"""Signature renamings and their action on formulas"""

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

from src.errors import SignatureError
from src.syntax.formula import (
    And, Atom, Bottom, Const, Eq, Exists, Forall, Formula, Implies, Or,
)
from src.syntax.signature import Signature


@dataclass(frozen=True)
class RenamingMap:
    """Bijections on predicate names and constant names"""

    pred_map: Tuple[Tuple[str, str], ...] = ()
    const_map: Tuple[Tuple[str, str], ...] = ()

    @classmethod
    def create(cls, pred_map: Optional[Mapping[str, str]] = None,
               const_map: Optional[Mapping[str, str]] = None) -> 'RenamingMap':
        pred_map = dict(pred_map or {})
        const_map = dict(const_map or {})
        for label, mapping in (('predicate', pred_map), ('constant', const_map)):
            if len(set(mapping.values())) != len(mapping):
                raise SignatureError(f"{label} renaming is not injective")
        return cls(tuple(sorted(pred_map.items())), tuple(sorted(const_map.items())))

    @classmethod
    def identity(cls, sig: Signature) -> 'RenamingMap':
        return cls.create({p: p for p in sig.predicate_names},
                          {c: c for c in sig.constants})

    @property
    def predicates(self) -> Dict[str, str]:
        return dict(self.pred_map)

    @property
    def constants(self) -> Dict[str, str]:
        return dict(self.const_map)

    def inverse(self) -> 'RenamingMap':
        return RenamingMap.create({v: k for k, v in self.pred_map},
                                  {v: k for k, v in self.const_map})

    def covers(self, sig: Signature) -> bool:
        return (set(sig.predicate_names) <= set(self.predicates)
                and sig.constants <= set(self.constants))

    def rename_signature(self, sig: Signature) -> Signature:
        """Image signature; arities are carried over unchanged"""
        if not self.covers(sig):
            missing = (set(sig.predicate_names) - set(self.predicates)) | \
                      (sig.constants - set(self.constants))
            raise SignatureError(f"renaming does not cover symbols {sorted(missing)}")
        preds, consts = self.predicates, self.constants
        return Signature.create(
            {preds[name]: arity for name, arity in sig.predicates},
            {consts[c] for c in sig.constants},
            sig.with_equality,
        )


def rename_formula(r: RenamingMap, f: Formula) -> Formula:
    """
    Apply a renaming to every predicate and constant occurrence.

    Raises:
        SignatureError: If f uses a symbol the renaming does not cover
    """
    preds, consts = r.predicates, r.constants

    def term(t):
        if isinstance(t, Const):
            if t.name not in consts:
                raise SignatureError(f"constant '{t.name}' not covered by renaming")
            return Const(consts[t.name])
        return t

    def walk(node: Formula) -> Formula:
        if isinstance(node, Atom):
            if node.predicate not in preds:
                raise SignatureError(f"predicate '{node.predicate}' not covered by renaming")
            return Atom(preds[node.predicate], tuple(term(t) for t in node.terms))
        if isinstance(node, Eq):
            return Eq(term(node.left), term(node.right))
        if isinstance(node, Bottom):
            return node
        if isinstance(node, (Forall, Exists)):
            return type(node)(node.var, walk(node.body))
        if isinstance(node, (And, Or, Implies)):
            return type(node)(walk(node.left), walk(node.right))
        raise TypeError(f"not a formula: {node!r}")

    return walk(f)


def minimal_signature(f: Formula) -> Signature:
    """The least signature over which f is a formula"""
    return Signature.create(f.predicates(), f.constants(), f.uses_equality())
