"""Compare sentence validity across the logic presentations over a model corpus"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.config import config
from src.kripke.generator import GeneratorParams, generate_random_model
from src.kripke.loader import load_model
from src.kripke.model import KripkeModel
from src.kripke.validation import classify_model
from src.semantics.evaluator import Evaluator
from src.semantics.logics import Logic
from src.syntax.formula import Formula
from src.syntax.parser import parse_sentence
from src.syntax.printer import print_formula
from src.syntax.signature import Signature

logger = logging.getLogger(__name__)

VALID = 'valid'
INVALID = 'invalid'
NOT_APPLICABLE = 'n/a'
UNTESTED = 'untested'

CORPUS_CLASSES = ('any', 'In', 'Su', 'Bi')


@dataclass(frozen=True)
class CorpusModel:
    name: str
    model: KripkeModel


@dataclass
class Verdict:
    """Outcome of one sentence under one logic"""

    status: str
    countermodel: Optional[str] = None
    models_checked: int = 0

    def __str__(self):
        if self.status == INVALID:
            return f"{INVALID} ({self.countermodel})"
        return self.status


@dataclass
class SentenceVerdicts:
    sentence: str
    verdicts: Dict[str, Verdict] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            'sentence': self.sentence,
            'verdicts': {name: {'status': v.status, 'countermodel': v.countermodel,
                                'models_checked': v.models_checked}
                         for name, v in self.verdicts.items()},
        }


@dataclass
class DiffReport:
    rows: List[SentenceVerdicts]
    corpus: List[str]
    seed: int
    caps: Dict[str, int]
    logics: Tuple[str, ...] = tuple(logic.label for logic in Logic)

    def consistency_problems(self) -> List[str]:
        """
        Countermodels in a subclass must be countermodels for the base logic.

        Returns:
            One message per sentence where a class logic is invalid while
            the unrestricted logic of the same language is valid
        """
        problems = []
        for row in self.rows:
            for logic in Logic:
                base = Logic.ILeq if logic.with_equality else Logic.IL
                verdict = row.verdicts.get(logic.label)
                if verdict and verdict.status == INVALID and \
                        getattr(row.verdicts.get(base.label), 'status', None) == VALID:
                    problems.append(f"{row.sentence}: {logic} invalid but {base} valid")
        return problems

    def separations(self) -> List[Tuple[str, str, str]]:
        """(sentence, valid logic, invalid logic) for every split verdict"""
        found = []
        for row in self.rows:
            valid = [name for name, v in row.verdicts.items() if v.status == VALID]
            invalid = [name for name, v in row.verdicts.items() if v.status == INVALID]
            found.extend((row.sentence, good, bad) for good in valid for bad in invalid)
        return found

    @property
    def exit_code(self) -> int:
        return 1 if self.consistency_problems() else 0

    def to_dict(self) -> Dict:
        return {
            'rows': [row.to_dict() for row in self.rows],
            'corpus': list(self.corpus),
            'seed': self.seed,
            'caps': dict(self.caps),
            'logics': list(self.logics),
            'consistency_problems': self.consistency_problems(),
        }


def read_sentences(path: Union[str, Path]) -> List[str]:
    """Non-empty lines of a sentence file; '#' starts a comment line"""
    lines = Path(path).read_text(encoding='utf-8').splitlines()
    return [line.strip() for line in lines if line.strip() and not line.strip().startswith('#')]


def _shared_signature(signatures: Iterable[Signature]) -> Signature:
    shared = Signature.create({})
    for sig in signatures:
        shared = shared.union(sig)
    return shared


def random_corpus(sig: Signature, seeds: int, seed: Optional[int] = None) -> List[CorpusModel]:
    """
    Seeded random models over sig, `seeds` per model class.

    Args:
        sig: Signature of the sentences under comparison
        seeds: Models drawn per class
        seed: Base seed (default config.seed)
    """
    base = config.seed if seed is None else seed
    corpus = []
    for cls in CORPUS_CLASSES:
        params = GeneratorParams(max_worlds=3, max_domain=2, preds=sig.predicate_map,
                                 consts=sorted(sig.constants), cls=cls,
                                 equality=sig.with_equality)
        for i in range(seeds):
            model_seed = (base * 1000003 + i * 7919 + CORPUS_CLASSES.index(cls)) & 0xFFFFFFFF
            corpus.append(CorpusModel(f"{cls}#{model_seed}", generate_random_model(model_seed, params)))
    return corpus


def fixture_corpus() -> List[CorpusModel]:
    return [CorpusModel(name, load_model(config.fixture_path(name))) for name in sorted(config.fixtures)]


def directory_corpus(corpus_dir: Union[str, Path]) -> List[CorpusModel]:
    return [CorpusModel(path.stem, load_model(path)) for path in sorted(Path(corpus_dir).glob('*.json'))]


class LogicComparer:
    """Decide, per logic presentation, whether sentences hold on every admissible corpus model"""

    def __init__(self, corpus: Sequence[CorpusModel], logics: Sequence[Logic] = tuple(Logic)):
        """
        Initialize comparer with a model corpus.

        Args:
            corpus: Named models; each is classified once
            logics: Presentations to compare
        """
        self.corpus = list(corpus)
        self.logics = tuple(logics)
        self.flags = {entry.name: classify_model(entry.model) for entry in self.corpus}

    def classify(self, sentence: Formula, sig: Optional[Signature] = None) -> SentenceVerdicts:
        """
        Verdicts of one sentence under every logic.

        A model takes part when its signature covers the sentence's
        predicates and constants and it is admissible for the logic.
        Equality sentences are not applicable to equality-free logics.

        Args:
            sentence: Sentence (no free variables)
            sig: Signature the sentence was read against

        Returns:
            SentenceVerdicts keyed by logic label
        """
        sig = sig or Signature.create(sentence.predicates(), sorted(sentence.constants()),
                                      sentence.uses_equality())
        row = SentenceVerdicts(print_formula(sentence))
        for logic in self.logics:
            if sentence.uses_equality() and not logic.with_equality:
                row.verdicts[logic.label] = Verdict(NOT_APPLICABLE)
                continue
            row.verdicts[logic.label] = self._decide(logic, sentence, sig)
        return row

    def _decide(self, logic: Logic, sentence: Formula, sig: Signature) -> Verdict:
        checked = 0
        for entry in self.corpus:
            m = entry.model
            if not sig.is_subsignature_of(m.signature) or not logic.admits(self.flags[entry.name]):
                continue
            if logic.with_equality:
                m = m.with_equality(True)
            evaluator = Evaluator(logic, m, check=False)
            checked += 1
            for w in m.worlds:
                if not evaluator.evaluate(w, sentence):
                    logger.debug(f"{logic}: countermodel {entry.name}@{w}")
                    return Verdict(INVALID, f"{entry.name}@{w}", checked)
        return Verdict(VALID if checked else UNTESTED, None, checked)

    def classify_batch(self, sentences: Sequence[Union[str, Formula]],
                       seed: Optional[int] = None) -> DiffReport:
        """
        Classify several sentences.

        Args:
            sentences: Sentence texts (parsed without a declared signature)
                or formulas
            seed: Seed recorded in the report

        Returns:
            DiffReport with one row per sentence
        """
        rows = []
        for item in sentences:
            if isinstance(item, str):
                f, sig = parse_sentence(item)
            else:
                f, sig = item, None
            rows.append(self.classify(f, sig))
        caps = dict(config.caps(), models=len(self.corpus))
        return DiffReport(rows, [entry.name for entry in self.corpus],
                          config.seed if seed is None else seed, caps,
                          tuple(logic.label for logic in self.logics))

    @staticmethod
    def get_stats(report: DiffReport) -> Dict[str, int]:
        """Count of valid sentences per logic"""
        stats = {name: 0 for name in report.logics}
        for row in report.rows:
            for name, verdict in row.verdicts.items():
                if verdict.status == VALID:
                    stats[name] = stats.get(name, 0) + 1
        return stats


def compare_sentences(sentences: Sequence[str], seeds: int = 20,
                      corpus_dir: Optional[Union[str, Path]] = None,
                      seed: Optional[int] = None) -> DiffReport:
    """
    Build the corpus and compare sentences across all logic presentations.

    With corpus_dir the corpus is exactly the models in that directory;
    otherwise it is the fixtures plus `seeds` random models per class over
    the shared signature of the sentences.
    """
    if corpus_dir is not None:
        corpus = directory_corpus(corpus_dir)
    else:
        shared = _shared_signature(parse_sentence(text)[1] for text in sentences)
        corpus = fixture_corpus() + random_corpus(shared, seeds, seed)
    report = LogicComparer(corpus).classify_batch(sentences, seed)
    for problem in report.consistency_problems():
        logger.warning(problem)
    return report
