import random

from hypothesis import strategies as st

from src.kripke.generator import GeneratorParams, generate_random_model, random_tuple
from src.syntax.generator import random_formula
from src.syntax.signature import Signature

seeds = st.integers(min_value=0, max_value=2 ** 31 - 1)


@st.composite
def signatures(draw, equality=None, constants=True):
    names = draw(st.lists(st.sampled_from(['P', 'Q', 'R']), unique=True, max_size=2))
    preds = {name: draw(st.integers(min_value=1, max_value=2)) for name in names}
    consts = draw(st.lists(st.sampled_from(['c', 'd']), unique=True, max_size=2)) if constants else []
    with_equality = draw(st.booleans()) if equality is None else equality
    return Signature.create(preds, consts, with_equality)


@st.composite
def formulas(draw, sig=None, max_rank=3, variables=()):
    if sig is None:
        sig = draw(signatures())
    return random_formula(random.Random(draw(seeds)), sig, max_rank=max_rank, variables=variables)


@st.composite
def models(draw, cls='any', max_worlds=3, max_domain=2, preds=None, consts=(),
           equality=False, rooted=False):
    params = GeneratorParams(max_worlds=max_worlds, max_domain=max_domain,
                             preds=preds or {'P': 1}, consts=consts, cls=cls,
                             equality=equality, rooted=rooted)
    return generate_random_model(draw(seeds), params)


@st.composite
def pointed(draw, max_length=1, **params):
    """(model, world, tuple) with the tuple drawn from the world's domain"""
    m = draw(models(**params))
    rng = random.Random(draw(seeds))
    w = rng.choice(m.worlds)
    return m, w, random_tuple(rng, m, w, rng.randint(0, max_length))
