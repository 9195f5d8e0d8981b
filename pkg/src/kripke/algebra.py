"""Model algebra: submodels, generated submodels, constant extensions,
reducts, renamings, chain unions and isomorphisms."""

from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from src.errors import ModelConstructionError, PreconditionError, SignatureError
from src.kripke.model import Element, KripkeModel
from src.kripke.validation import Diagnostic
from src.syntax.renaming import RenamingMap
from src.syntax.signature import Signature, check_identifier


def induced_submodel(n: KripkeModel, w_set: Iterable[str], x_set: Iterable[Element]) -> KripkeModel:
    """
    The unique submodel of n with node set w_set and domain x_set.

    Args:
        n: Ambient model
        w_set: Worlds to keep
        x_set: Elements to keep (must contain every constant denotation at
            kept worlds and be closed under the homs between kept worlds)

    Returns:
        KripkeModel with the order, structures and homs restricted

    Raises:
        ModelConstructionError: Naming the escaping element or the missing
            constant denotation
    """
    w_set = set(w_set)
    x_set = set(x_set)
    for w in sorted(w_set):
        n.check_world(w)

    for e in sorted(x_set):
        if e.world not in w_set or e not in n.domains[e.world]:
            raise ModelConstructionError(f"element {e} is not in a kept domain")

    for w in sorted(w_set):
        for c in sorted(n.signature.constants):
            if n.constant(w, c) not in x_set:
                raise ModelConstructionError(
                    f"constant '{c}' denotes {n.constant(w, c)} at '{w}', "
                    f"which is not kept"
                )

    order = {(w, v) for w, v in n.order if w in w_set and v in w_set}
    for w, v in sorted(order):
        mapping = n.hom(w, v)
        for e in sorted(x_set):
            if e.world == w and mapping[e] not in x_set:
                raise ModelConstructionError(
                    f"element {e} escapes to {mapping[e]} under H_{w}{v}"
                )

    domains = {w: {e for e in x_set if e.world == w} for w in w_set}
    predicates = {
        w: {name: {args for args in n.extension(w, name)
                   if all(a in domains[w] for a in args)}
            for name in n.signature.predicate_names}
        for w in w_set
    }
    constants = {w: dict(n.constants[w]) for w in w_set}
    homs = {(w, v): {e: n.hom(w, v)[e] for e in domains[w]} for w, v in order}

    return KripkeModel.build(n.signature, w_set, order, domains, predicates, constants, homs,
                             close_order=False, compose_homs=False)


def generated_submodel(m: KripkeModel, w: str) -> KripkeModel:
    """[M, w]: the restriction to worlds above w with full domains"""
    worlds = m.successors(w)
    elements = [e for v in worlds for e in m.domains[v]]
    return induced_submodel(m, worlds, elements)


def constant_extension(m: KripkeModel, w: str, consts: Sequence[str],
                       elems: Sequence[Element]) -> KripkeModel:
    """
    The canonical member ([M, w], c/a) of the constant extensions.

    New constants denote a at w and H_wv(a) at every v above w.

    Raises:
        SignatureError: If a constant is not fresh or constants repeat
        PreconditionError: If an element is not in A_w or lengths differ
    """
    consts = list(consts)
    elems = list(elems)
    if len(consts) != len(elems):
        raise PreconditionError(f"{len(consts)} constants for {len(elems)} elements")
    if len(set(consts)) != len(consts):
        raise SignatureError(f"constants must be pairwise distinct: {consts}")
    for c in consts:
        check_identifier(c, 'constant')
        if c in m.signature.symbols():
            raise SignatureError(f"constant '{c}' is not fresh")
    m.check_world(w)
    for a in elems:
        if a not in m.domains[w]:
            raise PreconditionError(f"element {a} is not in the domain of '{w}'")

    base = generated_submodel(m, w)
    signature = base.signature.with_constants(consts)
    constants = {}
    for v in base.worlds:
        table = dict(base.constants[v])
        for c, a in zip(consts, elems):
            table[c] = m.hom(w, v)[a]
        constants[v] = table

    return KripkeModel(signature, base.worlds, base.order, base.domains,
                       _rekey_predicates(base, signature), constants, base.homs)


def _rekey_predicates(m: KripkeModel, signature: Signature):
    return {w: {name: m.extension(w, name) for name in signature.predicate_names}
            for w in m.worlds}


def reduct(m: KripkeModel, sub_sig: Signature) -> KripkeModel:
    """
    Forget interpretations outside sub_sig; frame, domains and homs stay.

    Raises:
        SignatureError: If sub_sig is not a subsignature of m's
    """
    if not sub_sig.is_subsignature_of(m.signature):
        raise SignatureError(
            f"{sub_sig.describe()} is not a subsignature of {m.signature.describe()}"
        )
    sub_sig = sub_sig.with_equality_flag(m.signature.with_equality and sub_sig.with_equality)
    constants = {w: {c: e for c, e in m.constants[w].items() if c in sub_sig.constants}
                 for w in m.worlds}
    return KripkeModel(sub_sig, m.worlds, m.order, m.domains,
                       _rekey_predicates(m, sub_sig), constants, m.homs)


def rename_model(m: KripkeModel, r: RenamingMap) -> KripkeModel:
    """
    Rename predicates and constants; J_v(f(P)) = I_v(P), J_v(g(c)) = I_v(c).

    Raises:
        SignatureError: If the renaming does not cover m's signature
    """
    signature = r.rename_signature(m.signature)
    preds, consts = r.predicates, r.constants
    predicates = {w: {preds[name]: m.extension(w, name) for name in m.signature.predicate_names}
                  for w in m.worlds}
    constants = {w: {consts[c]: e for c, e in m.constants[w].items()} for w in m.worlds}
    return KripkeModel(signature, m.worlds, m.order, m.domains, predicates, constants, m.homs)


def submodel_violations(m: KripkeModel, n: KripkeModel) -> List[Diagnostic]:
    """
    Check m against the submodel definition relative to n.

    Returns:
        Diagnostics naming the failed law; empty iff m is a submodel of n
    """
    problems: List[Diagnostic] = []
    if m.signature != n.signature:
        problems.append(Diagnostic('signature', "signatures differ"))
        return problems

    missing = [w for w in m.worlds if w not in n.domains]
    if missing:
        problems.append(Diagnostic('nodes', f"worlds {missing} not in the larger model",
                                   tuple(missing)))
        return problems

    for w in m.worlds:
        for v in m.worlds:
            if m.leq(w, v) != n.leq(w, v):
                problems.append(Diagnostic('order', f"order differs on ({w}, {v})", (w, v)))
                return problems

    for w in m.worlds:
        if not m.domains[w] <= n.domains[w]:
            problems.append(Diagnostic('domain', f"A_{w} is not contained in B_{w}", (w,)))
            return problems
        for name in m.signature.predicate_names:
            restricted = {args for args in n.extension(w, name)
                          if all(a in m.domains[w] for a in args)}
            if m.extension(w, name) != restricted:
                problems.append(Diagnostic('classical-submodel',
                                           f"{name} at '{w}' is not the restriction", (w, name)))
                return problems
        for c in m.signature.constants:
            if m.constants[w].get(c) != n.constants[w].get(c):
                problems.append(Diagnostic('classical-submodel',
                                           f"constant '{c}' differs at '{w}'", (w, c)))
                return problems

    for (w, v), mapping in m.homs.items():
        big = n.homs.get((w, v), {})
        if any(big.get(a) != b for a, b in mapping.items()):
            problems.append(Diagnostic('hom-restriction',
                                       f"H_{w}{v} is not a restriction", (w, v)))
            return problems

    return problems


def is_submodel(m: KripkeModel, n: KripkeModel) -> bool:
    return not submodel_violations(m, n)


def union_chain(chain: Sequence[KripkeModel]) -> KripkeModel:
    """
    Componentwise union of a finite chain M_1 <= M_2 <= ... of submodels.

    Raises:
        PreconditionError: Naming the first offending pair and law
    """
    chain = list(chain)
    if not chain:
        raise PreconditionError("empty chain")
    for i, (small, big) in enumerate(zip(chain, chain[1:])):
        problems = submodel_violations(small, big)
        if problems:
            raise PreconditionError(
                f"chain member {i} is not a submodel of member {i + 1}: {problems[0]}"
            )

    signature = chain[0].signature
    worlds, order, domains = set(), set(), {}
    predicates, constants, homs = {}, {}, {}
    for member in chain:
        worlds |= set(member.worlds)
        order |= member.order
        for w in member.worlds:
            domains.setdefault(w, set()).update(member.domains[w])
            table = predicates.setdefault(w, {})
            for name in signature.predicate_names:
                table.setdefault(name, set()).update(member.extension(w, name))
            constants.setdefault(w, {}).update(member.constants[w])
        for key, mapping in member.homs.items():
            homs.setdefault(key, {}).update(mapping)

    return KripkeModel.build(signature, worlds, order, domains, predicates, constants, homs,
                             close_order=False, compose_homs=False)


def check_isomorphism(m: KripkeModel, n: KripkeModel,
                      g: Mapping[Element, Element], h: Mapping[str, str]) -> bool:
    """
    Test whether (g, h) is an isomorphism from m onto n.

    h must be a bijection of worlds preserving and reflecting the order, g a
    bijection of elements restricting to classical isomorphisms
    A_v -> B_h(v) and commuting with the homs.
    """
    if m.signature != n.signature:
        return False
    if set(h) != set(m.worlds) or set(h.values()) != set(n.worlds) or len(n.worlds) != len(m.worlds):
        return False

    for w in m.worlds:
        for v in m.worlds:
            if m.leq(w, v) != n.leq(h[w], h[v]):
                return False

    for w in m.worlds:
        image = {g.get(a) for a in m.domains[w]}
        if image != set(n.domains[h[w]]) or len(image) != len(m.domains[w]):
            return False
        for name in m.signature.predicate_names:
            mapped = {tuple(g[a] for a in args) for args in m.extension(w, name)}
            if mapped != set(n.extension(h[w], name)):
                return False
        for c in m.signature.constants:
            if g[m.constant(w, c)] != n.constant(h[w], c):
                return False

    for (w, v), mapping in m.homs.items():
        target = n.homs.get((h[w], h[v]))
        if target is None:
            return False
        if any(g[mapping[a]] != target[g[a]] for a in m.domains[w]):
            return False
    return True


def relabel_elements(m: KripkeModel, mapping: Mapping[Element, str]) -> Tuple[KripkeModel, Dict[Element, Element]]:
    """
    Copy m with elements renamed by local name.

    Args:
        m: Model
        mapping: Element -> new local name (elements absent keep their name)

    Returns:
        (copy, element bijection from m to the copy)
    """
    g = {e: Element(e.world, mapping.get(e, e.name)) for e in m.all_elements()}
    if len(set(g.values())) != len(g):
        raise ModelConstructionError("relabelling merges elements")
    return _transport(m, g, {w: w for w in m.worlds}), g


def relabel_worlds(m: KripkeModel, mapping: Mapping[str, str]) -> Tuple[KripkeModel, Dict[Element, Element], Dict[str, str]]:
    """Copy m with worlds renamed; returns (copy, element map, world map)"""
    h = {w: mapping.get(w, w) for w in m.worlds}
    if len(set(h.values())) != len(h):
        raise ModelConstructionError("relabelling merges worlds")
    g = {e: Element(h[e.world], e.name) for e in m.all_elements()}
    return _transport(m, g, h), g, h


def _transport(m: KripkeModel, g: Mapping[Element, Element], h: Mapping[str, str]) -> KripkeModel:
    worlds = [h[w] for w in m.worlds]
    order = {(h[w], h[v]) for w, v in m.order}
    domains = {h[w]: {g[e] for e in m.domains[w]} for w in m.worlds}
    predicates = {h[w]: {name: {tuple(g[a] for a in args) for args in m.extension(w, name)}
                         for name in m.signature.predicate_names}
                  for w in m.worlds}
    constants = {h[w]: {c: g[e] for c, e in m.constants[w].items()} for w in m.worlds}
    homs = {(h[w], h[v]): {g[a]: g[b] for a, b in mapping.items()}
            for (w, v), mapping in m.homs.items()}
    return KripkeModel.build(m.signature, worlds, order, domains, predicates, constants, homs,
                             close_order=False, compose_homs=False)

